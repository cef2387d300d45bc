#ifndef PYTUPLE_TUPLES_HPP
#define PYTUPLE_TUPLES_HPP

#include <cstdint>
#include <vector>

#include "factorization.hpp"
#include "natural.hpp"
#include "triples.hpp"

namespace pytuple {

// One completion of a_1^2 + ... + a_{n-2}^2 + completion^2 = hypotenuse^2
// for the given legs, with hypotenuse = completion + delta.
struct TupleSolution {
    std::vector<Natural> legs; // the given legs, input order
    Natural k;                 // sum of squares of the legs
    Natural completion;
    Natural hypotenuse;
    Natural delta;
    Classification classification = Classification::NonPrimitive;

    bool primitive() const { return classification == Classification::Primitive; }
};

enum class InfeasibilityReason { None, KCongruentTwoModFour };

struct FeasibilityReport {
    Natural k;
    std::uint64_t odd_leg_count = 0;
    bool feasible = true;
    InfeasibilityReason reason = InfeasibilityReason::None;
};

// Default refusal point (on k) for the O(k) brute-force scan.
inline constexpr std::uint64_t kOracleSumCap = 4'000'000;

// Exact sum of squared legs; every leg must be >= 1.
Natural sum_of_squares(const std::vector<Natural>& legs);

// No completion exists at all iff k == 2 (mod 4), equivalently iff the
// number of odd legs is 2 (mod 4).
FeasibilityReport feasibility(const std::vector<Natural>& legs);

// Every admissible gap: delta | k, delta^2 < k, k/delta == delta (mod 2),
// ascending. Empty (not an error) when infeasible.
std::vector<Natural> valid_deltas_for(const std::vector<Natural>& legs,
                                      std::uint64_t budget = kDefaultFactorBudget);

// completion = (k - delta^2) / (2 delta). Throws InvalidDelta naming the
// violated condition.
TupleSolution complete_tuple(const std::vector<Natural>& legs, const Natural& delta);

// One solution per admissible delta, ascending by delta, filtered by class.
std::vector<TupleSolution> all_completions(const std::vector<Natural>& legs,
                                           ClassFilter filter = ClassFilter::All,
                                           std::uint64_t budget = kDefaultFactorBudget);

// Deltas giving primitive completions, from the factorization of k alone.
// Write k = 2^w * prod p_i^{m_i} * prod q_j^{s_j} with p_i the odd primes
// dividing every leg and q_j the rest. The result is
// { 2^r * prod p_i^{r_i} * prod q_j^{t_j} : r in R, r_i in {0, m_i},
//   t_j in 0..s_j, delta^2 < k } where R = {0} for odd k and, when every
// leg is even, R = {1, w-1} for w >= 3 and empty for w == 2; when k is
// even but some leg is odd, 2 cannot divide the tuple gcd and R is all of
// 1..w-1.
std::vector<Natural> predict_primitive_deltas_tuple(const std::vector<Natural>& legs,
                                                    std::uint64_t budget = kDefaultFactorBudget);

// Independent completeness oracle: scans completion = 1 .. (k-1)/2 for
// perfect squares k + completion^2, with no delta logic. Refuses k > cap.
std::vector<TupleSolution> oracle_completions(const std::vector<Natural>& legs,
                                              std::uint64_t cap = kOracleSumCap);

} // namespace pytuple

#endif
