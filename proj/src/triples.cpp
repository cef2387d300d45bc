#include "triples.hpp"

#include <algorithm>
#include <numeric>

namespace pytuple {

namespace {

Classification classify3(const Natural& a, const Natural& b, const Natural& c) {
    const Natural values[] = {a, b, c};
    return gcd_all(std::span<const Natural>(values, 3)) == 1 ? Classification::Primitive
                                                             : Classification::NonPrimitive;
}

bool keep(Classification cls, ClassFilter filter) {
    switch (filter) {
    case ClassFilter::All: return true;
    case ClassFilter::PrimitiveOnly: return cls == Classification::Primitive;
    case ClassFilter::NonPrimitiveOnly: return cls == Classification::NonPrimitive;
    }
    return true;
}

// Expands prod p_i^{t_i} over the allowed exponent choices, keeping only
// candidates below `limit`, and collects base * candidate.
void expand_odd_part(const std::vector<std::vector<Natural>>& choices, std::size_t idx,
                     const Natural& acc, const Natural& limit, std::vector<Natural>& out) {
    if (acc >= limit)
        return;
    if (idx == choices.size()) {
        out.push_back(acc);
        return;
    }
    for (const Natural& powered : choices[idx])
        expand_odd_part(choices, idx + 1, acc * powered, limit, out);
}

} // namespace

std::vector<Natural> valid_deltas(const Natural& a, std::uint64_t budget) {
    if (a < 1)
        throw DomainError("leg must be at least 1");
    if (a <= 2)
        return {};
    return divisors_below(square(factorize(a, budget)), a, DivisorParity::SameAsCofactor);
}

Triple triple_from_delta(const Natural& a, const Natural& delta) {
    if (a < 1)
        throw DomainError("leg must be at least 1");
    if (delta < 1)
        throw InvalidDeltaError("delta " + to_decimal(delta) + " must be at least 1");
    if (delta >= a)
        throw InvalidDeltaError("delta " + to_decimal(delta) + " is not below leg " + to_decimal(a));
    const Natural a2 = a * a;
    if (a2 % delta != 0)
        throw InvalidDeltaError("delta " + to_decimal(delta) + " does not divide " + to_decimal(a) + "^2");
    const Natural cofactor = a2 / delta;
    if (is_even(cofactor) != is_even(delta))
        throw InvalidDeltaError("delta " + to_decimal(delta) + " and cofactor " + to_decimal(cofactor) +
                                " have opposite parity");
    Triple t;
    t.a = a;
    t.delta = delta;
    t.b = (a2 - delta * delta) / (2 * delta);
    t.c = t.b + delta;
    t.classification = classify3(t.a, t.b, t.c);
    return t;
}

std::vector<Triple> all_triples(const Natural& a, ClassFilter filter, std::uint64_t budget) {
    std::vector<Triple> out;
    for (const Natural& delta : valid_deltas(a, budget)) {
        Triple t = triple_from_delta(a, delta);
        if (keep(t.classification, filter))
            out.push_back(std::move(t));
    }
    return out;
}

std::vector<Natural> predict_primitive_deltas(const Natural& a, std::uint64_t budget) {
    if (a < 1)
        throw DomainError("leg must be at least 1");
    const Factorization f = factorize(a, budget);

    unsigned m = 0;
    std::vector<std::vector<Natural>> odd_choices; // {1, p^{2s}} per odd prime
    for (const auto& pp : f.factors) {
        if (pp.prime == 2) {
            m = pp.exponent;
            continue;
        }
        Natural p2s = 1;
        for (unsigned i = 0; i < 2 * pp.exponent; ++i)
            p2s *= pp.prime;
        odd_choices.push_back({Natural(1), p2s});
    }

    std::vector<unsigned> two_exponents;
    if (m == 0)
        two_exponents = {0};
    else if (m >= 2)
        two_exponents = {1, 2 * m - 1};
    // m == 1 admits no primitive triple at all

    std::vector<Natural> out;
    for (unsigned r : two_exponents) {
        Natural base = Natural(1) << r;
        expand_odd_part(odd_choices, 0, base, a, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TripleForecast forecast_counts(const Natural& a, std::uint64_t budget) {
    TripleForecast fc;
    fc.leg = a;
    fc.total = valid_deltas(a, budget).size();
    fc.primitive_deltas = predict_primitive_deltas(a, budget);
    fc.primitive = fc.primitive_deltas.size();
    fc.non_primitive = fc.total - fc.primitive;
    return fc;
}

Triple euclid_generate(const Natural& m, const Natural& n) {
    if (n < 1)
        throw DomainError("euclid parameter n must be at least 1");
    if (m <= n)
        throw DomainError("euclid parameters require m > n");
    Triple t;
    t.a = m * m - n * n;
    t.b = 2 * m * n;
    t.c = m * m + n * n;
    t.delta = t.c - t.b;
    t.classification = classify3(t.a, t.b, t.c);
    return t;
}

std::vector<Triple> oracle_triples(const Natural& a, std::uint64_t cap) {
    if (a < 1)
        throw DomainError("leg must be at least 1");
    if (a > cap)
        throw OracleCapExceededError("leg " + to_decimal(a) + " is above the brute-force scan cap " +
                                     std::to_string(cap));
    std::vector<Triple> out;
    if (a <= 60000) {
        // 64-bit scan: a <= 60000 keeps a^2 + b^2 below 2^63
        const auto leg = a.convert_to<std::uint64_t>();
        const std::uint64_t a2 = leg * leg;
        for (std::uint64_t b = 1; 2 * b + 1 <= a2; ++b) {
            const std::uint64_t s = a2 + b * b;
            const std::uint64_t r = isqrt_u64(s);
            if (r * r != s)
                continue;
            Triple t;
            t.a = a;
            t.b = b;
            t.c = r;
            t.delta = r - b;
            t.classification = std::gcd(std::gcd(leg, b), r) == 1 ? Classification::Primitive
                                                                  : Classification::NonPrimitive;
            out.push_back(std::move(t));
        }
        return out;
    }
    const Natural a2 = a * a;
    for (Natural b = 1; 2 * b + 1 <= a2; ++b) {
        auto [sq, c] = is_perfect_square(a2 + b * b);
        if (!sq)
            continue;
        Triple t;
        t.a = a;
        t.b = b;
        t.c = c;
        t.delta = c - b;
        t.classification = classify3(a, b, c);
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace pytuple
