#ifndef PYTUPLE_FACTORIZATION_HPP
#define PYTUPLE_FACTORIZATION_HPP

#include <cstdint>
#include <vector>

#include "natural.hpp"

namespace pytuple {

// Effort limit for the rho splitter, in iterations summed over the whole
// factorize() call. Hitting it raises BudgetExceeded instead of hanging on
// adversarial input; it never yields a partial factorization.
inline constexpr std::uint64_t kDefaultFactorBudget = 8'000'000;

struct PrimePower {
    Natural prime;
    unsigned exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

// Complete prime factorization. `factors` is sorted by strictly increasing
// prime, every exponent >= 1, and the product of prime^exponent equals
// `value`. The factorization of 1 has an empty list.
struct Factorization {
    Natural value;
    std::vector<PrimePower> factors;

    bool operator==(const Factorization&) const = default;
};

// Deterministic primality test: Miller-Rabin over a base set proven for
// values below 3.317e24, strengthened with a strong Lucas test above that.
bool is_prime(const Natural& n);

// Complete factorization of n >= 1. Deterministic for a given n. Trial
// division by small primes first, then primality testing plus a Brent-rho
// splitter whose iterations are charged against `budget`.
Factorization factorize(const Natural& n, std::uint64_t budget = kDefaultFactorBudget);

// Doubles every exponent: the factorization of value^2.
Factorization square(const Factorization& f);

// Number-of-divisors from the exponents.
Natural divisor_count(const Factorization& f);

enum class DivisorParity {
    Any,
    SameAsCofactor, // keep d only when d and value/d are both odd or both even
};

// Ascending divisors d of f.value with d < bound (strict). Generated from
// the exponent tuples, so the cost is proportional to tau(value), not value.
std::vector<Natural> divisors_below(const Factorization& f, const Natural& bound,
                                    DivisorParity parity = DivisorParity::Any);

} // namespace pytuple

#endif
