#include "tuples.hpp"

#include <algorithm>
#include <numeric>

namespace pytuple {

namespace {

Classification classify_full(const std::vector<Natural>& legs, const Natural& completion,
                             const Natural& hypotenuse) {
    std::vector<Natural> all = legs;
    all.push_back(completion);
    all.push_back(hypotenuse);
    return gcd_all(all) == 1 ? Classification::Primitive : Classification::NonPrimitive;
}

bool keep(Classification cls, ClassFilter filter) {
    switch (filter) {
    case ClassFilter::All: return true;
    case ClassFilter::PrimitiveOnly: return cls == Classification::Primitive;
    case ClassFilter::NonPrimitiveOnly: return cls == Classification::NonPrimitive;
    }
    return true;
}

// Exclusive upper bound b with (d < b) == (d^2 < k) for divisors d of k.
Natural strict_sqrt_bound(const Natural& k) {
    auto [exact, root] = is_perfect_square(k);
    return exact ? root : root + 1;
}

void expand_choices(const std::vector<std::vector<Natural>>& choices, std::size_t idx,
                    const Natural& acc, const Natural& bound, std::vector<Natural>& out) {
    if (acc >= bound)
        return;
    if (idx == choices.size()) {
        out.push_back(acc);
        return;
    }
    for (const Natural& powered : choices[idx])
        expand_choices(choices, idx + 1, acc * powered, bound, out);
}

} // namespace

Natural sum_of_squares(const std::vector<Natural>& legs) {
    if (legs.empty())
        throw DomainError("at least one leg is required");
    Natural k = 0;
    for (const Natural& leg : legs) {
        if (leg < 1)
            throw DomainError("legs must be at least 1");
        k += leg * leg;
    }
    return k;
}

FeasibilityReport feasibility(const std::vector<Natural>& legs) {
    FeasibilityReport report;
    report.k = sum_of_squares(legs);
    for (const Natural& leg : legs)
        report.odd_leg_count += is_odd(leg) ? 1 : 0;
    report.feasible = report.k % 4 != 2;
    report.reason = report.feasible ? InfeasibilityReason::None
                                    : InfeasibilityReason::KCongruentTwoModFour;
    return report;
}

std::vector<Natural> valid_deltas_for(const std::vector<Natural>& legs, std::uint64_t budget) {
    const FeasibilityReport report = feasibility(legs);
    if (!report.feasible)
        return {};
    return divisors_below(factorize(report.k, budget), strict_sqrt_bound(report.k),
                          DivisorParity::SameAsCofactor);
}

TupleSolution complete_tuple(const std::vector<Natural>& legs, const Natural& delta) {
    const Natural k = sum_of_squares(legs);
    if (delta < 1)
        throw InvalidDeltaError("delta " + to_decimal(delta) + " must be at least 1");
    if (delta * delta >= k)
        throw InvalidDeltaError("delta " + to_decimal(delta) + " squared is not below k = " +
                                to_decimal(k));
    if (k % delta != 0)
        throw InvalidDeltaError("delta " + to_decimal(delta) + " does not divide k = " + to_decimal(k));
    const Natural cofactor = k / delta;
    if (is_even(cofactor) != is_even(delta))
        throw InvalidDeltaError("delta " + to_decimal(delta) + " and cofactor " + to_decimal(cofactor) +
                                " have opposite parity");
    TupleSolution s;
    s.legs = legs;
    s.k = k;
    s.delta = delta;
    s.completion = (k - delta * delta) / (2 * delta);
    s.hypotenuse = s.completion + delta;
    s.classification = classify_full(legs, s.completion, s.hypotenuse);
    return s;
}

std::vector<TupleSolution> all_completions(const std::vector<Natural>& legs, ClassFilter filter,
                                           std::uint64_t budget) {
    std::vector<TupleSolution> out;
    for (const Natural& delta : valid_deltas_for(legs, budget)) {
        TupleSolution s = complete_tuple(legs, delta);
        if (keep(s.classification, filter))
            out.push_back(std::move(s));
    }
    return out;
}

std::vector<Natural> predict_primitive_deltas_tuple(const std::vector<Natural>& legs,
                                                    std::uint64_t budget) {
    const Natural k = sum_of_squares(legs);
    const Natural leg_gcd = gcd_all(legs);
    const Factorization f = factorize(k, budget);

    unsigned w = 0;
    std::vector<std::vector<Natural>> choices;
    for (const auto& pp : f.factors) {
        if (pp.prime == 2) {
            w = pp.exponent;
            continue;
        }
        std::vector<Natural> powers;
        if (leg_gcd % pp.prime == 0) {
            // common odd prime: all-or-nothing exponent
            Natural top = 1;
            for (unsigned i = 0; i < pp.exponent; ++i)
                top *= pp.prime;
            powers = {Natural(1), top};
        } else {
            // free odd prime: any exponent up to its multiplicity in k
            Natural pw = 1;
            powers.push_back(pw);
            for (unsigned i = 0; i < pp.exponent; ++i) {
                pw *= pp.prime;
                powers.push_back(pw);
            }
        }
        choices.push_back(std::move(powers));
    }

    std::vector<unsigned> two_exponents;
    if (w == 0) {
        two_exponents = {0};
    } else if (is_odd(leg_gcd)) {
        // some leg is odd, so 2 can never divide the tuple gcd: every
        // admissible 2-exponent is open (parity of k/delta needs 1..w-1)
        for (unsigned r = 1; r < w; ++r)
            two_exponents.push_back(r);
    } else if (w >= 3) {
        two_exponents = {1, w - 1};
    }
    // all legs even with w == 1 is infeasible outright and with w == 2
    // the completion comes out even, so neither admits a primitive solution

    const Natural bound = strict_sqrt_bound(k);
    std::vector<Natural> out;
    for (unsigned r : two_exponents)
        expand_choices(choices, 0, Natural(1) << r, bound, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TupleSolution> oracle_completions(const std::vector<Natural>& legs, std::uint64_t cap) {
    const Natural k_nat = sum_of_squares(legs);
    if (k_nat > cap)
        throw OracleCapExceededError("k = " + to_decimal(k_nat) + " is above the brute-force scan cap " +
                                     std::to_string(cap));
    std::vector<TupleSolution> out;
    const auto emit = [&](const Natural& c, const Natural& d) {
        TupleSolution sol;
        sol.legs = legs;
        sol.k = k_nat;
        sol.completion = c;
        sol.hypotenuse = d;
        sol.delta = d - c;
        sol.classification = classify_full(legs, sol.completion, sol.hypotenuse);
        out.push_back(std::move(sol));
    };
    if (k_nat <= 4'000'000'000ull) {
        // 64-bit scan: k <= 4e9 keeps k + c^2 below 2^63
        const auto k = k_nat.convert_to<std::uint64_t>();
        for (std::uint64_t c = 1; 2 * c + 1 <= k; ++c) {
            const std::uint64_t s = k + c * c;
            const std::uint64_t r = isqrt_u64(s);
            if (r * r == s)
                emit(Natural(c), Natural(r));
        }
        return out;
    }
    for (Natural c = 1; 2 * c + 1 <= k_nat; ++c) {
        auto [sq, d] = is_perfect_square(k_nat + c * c);
        if (sq)
            emit(c, d);
    }
    return out;
}

} // namespace pytuple
