#ifndef PYTUPLE_TRIPLES_HPP
#define PYTUPLE_TRIPLES_HPP

#include <cstdint>
#include <vector>

#include "factorization.hpp"
#include "natural.hpp"

namespace pytuple {

enum class Classification { Primitive, NonPrimitive };

enum class ClassFilter { All, PrimitiveOnly, NonPrimitiveOnly };

// One solution of a^2 + b^2 = c^2 for the given leg a, with c = b + delta.
struct Triple {
    Natural a;
    Natural b;
    Natural c;
    Natural delta;
    Classification classification = Classification::NonPrimitive;

    bool primitive() const { return classification == Classification::Primitive; }
    bool operator==(const Triple&) const = default;
};

struct TripleForecast {
    Natural leg;
    std::uint64_t total = 0;
    std::uint64_t primitive = 0;
    std::uint64_t non_primitive = 0;
    std::vector<Natural> primitive_deltas; // ascending
};

// Default refusal point for the O(a^2) brute-force scan.
inline constexpr std::uint64_t kOracleLegCap = 2000;

// Every admissible gap for leg a: the delta with delta | a^2, delta < a and
// a^2/delta == delta (mod 2), ascending. Empty for a in {1, 2}.
std::vector<Natural> valid_deltas(const Natural& a, std::uint64_t budget = kDefaultFactorBudget);

// The unique triple for an admissible (a, delta): b = (a^2 - delta^2) / (2 delta).
// Throws InvalidDelta naming the violated condition otherwise.
Triple triple_from_delta(const Natural& a, const Natural& delta);

// One triple per admissible delta, ascending by delta, filtered by class.
std::vector<Triple> all_triples(const Natural& a, ClassFilter filter = ClassFilter::All,
                                std::uint64_t budget = kDefaultFactorBudget);

// Deltas giving primitive triples, computed from the factorization of a
// alone. Write a = 2^m * prod p_i^{s_i} with p_i odd; the result is
// { 2^r * prod p_i^{t_i} : t_i in {0, 2 s_i}, r in R, delta < a } where
// R = {0} for m = 0, R = {} for m = 1, R = {1, 2m-1} for m >= 2.
std::vector<Natural> predict_primitive_deltas(const Natural& a,
                                              std::uint64_t budget = kDefaultFactorBudget);

// Counts and the primitive delta set, without materializing any b or c.
TripleForecast forecast_counts(const Natural& a, std::uint64_t budget = kDefaultFactorBudget);

// (m^2 - n^2, 2mn, m^2 + n^2) for m > n >= 1, classified by gcd.
Triple euclid_generate(const Natural& m, const Natural& n);

// Independent completeness oracle: scans b = 1 .. (a^2-1)/2 for perfect
// squares a^2 + b^2, with no delta logic. Refuses legs above `cap`.
std::vector<Triple> oracle_triples(const Natural& a, std::uint64_t cap = kOracleLegCap);

} // namespace pytuple

#endif
