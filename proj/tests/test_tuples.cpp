#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <set>
#include <string>

#include "tuples.hpp"

using namespace pytuple;

namespace {

std::vector<Natural> nats(std::initializer_list<std::uint64_t> xs) {
    return {xs.begin(), xs.end()};
}

// independent of all delta logic: scan every completion and test for a square
std::vector<std::pair<std::uint64_t, std::uint64_t>> scan_completions(std::uint64_t k) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t c = 1; 2 * c + 1 <= k; ++c) {
        const auto d = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(k + c * c))));
        for (std::uint64_t r = d > 0 ? d - 1 : 0; r <= d + 1; ++r)
            if (r * r == k + c * c)
                out.push_back({c, r});
    }
    return out;
}

std::vector<Natural> deltas_of(const std::vector<TupleSolution>& solutions) {
    std::vector<Natural> out;
    for (const TupleSolution& s : solutions)
        out.push_back(s.delta);
    return out;
}

} // namespace

TEST_CASE("sum_of_squares worked examples") {
    CHECK(sum_of_squares(nats({12, 15})) == 369);
    CHECK(sum_of_squares(nats({8, 19})) == 425);
    CHECK(sum_of_squares(nats({55, 15, 20, 10, 35, 45, 30, 25})) == 8525);
    CHECK_THROWS_AS(sum_of_squares(nats({3, 0})), DomainError);
    CHECK_THROWS_AS(sum_of_squares(std::vector<Natural>{}), DomainError);
}

TEST_CASE("feasibility worked examples") {
    const FeasibilityReport both_odd = feasibility(nats({3, 5}));
    CHECK(both_odd.k == 34);
    CHECK(both_odd.odd_leg_count == 2);
    CHECK_FALSE(both_odd.feasible);
    CHECK(both_odd.reason == InfeasibilityReason::KCongruentTwoModFour);

    CHECK(feasibility(nats({12, 15})).feasible);

    const FeasibilityReport four_odd = feasibility(nats({1, 1, 1, 1}));
    CHECK(four_odd.k == 4);
    CHECK(four_odd.feasible); // necessary, not sufficient: no completion exists

    // infeasible exactly when the odd-leg count is 2 mod 4
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t len = 1 + rng() % 9;
        std::vector<Natural> legs;
        std::uint64_t odd = 0;
        for (std::size_t i = 0; i < len; ++i) {
            const std::uint64_t v = 1 + rng() % 200;
            odd += v % 2;
            legs.emplace_back(v);
        }
        CHECK(feasibility(legs).feasible == (odd % 4 != 2));
    }
}

TEST_CASE("valid_deltas_for worked examples") {
    CHECK(valid_deltas_for(nats({12, 15})) == nats({1, 3, 9}));
    CHECK(valid_deltas_for(nats({105, 150})) == nats({1, 3, 5, 9, 15, 25, 45, 75, 149}));
    CHECK(valid_deltas_for(nats({3, 5})).empty());
    CHECK(valid_deltas_for(nats({1, 1, 1, 1})).empty());
}

TEST_CASE("complete_tuple worked examples") {
    const TupleSolution quad = complete_tuple(nats({8, 19}), Natural(17));
    CHECK(quad.completion == 4);
    CHECK(quad.hypotenuse == 21);
    CHECK(quad.primitive());

    const TupleSolution even = complete_tuple(nats({6, 30}), Natural(26));
    CHECK(even.completion == 5);
    CHECK(even.hypotenuse == 31);
    CHECK(even.primitive());

    const TupleSolution ten = complete_tuple(nats({55, 15, 20, 10, 35, 45, 30, 25}), Natural(31));
    CHECK(ten.completion == 122);
    CHECK(ten.hypotenuse == 153);

    const TupleSolution nonprim = complete_tuple(nats({105, 150}), Natural(75));
    CHECK(nonprim.completion == 186);
    CHECK(nonprim.hypotenuse == 261);
    CHECK_FALSE(nonprim.primitive());
}

TEST_CASE("complete_tuple reports the violated condition") {
    try {
        complete_tuple(nats({12, 15}), Natural(41)); // 41 | 369 but 41^2 > 369
        FAIL("expected InvalidDelta");
    } catch (const InvalidDeltaError& e) {
        CHECK(std::string(e.what()).find("squared is not below") != std::string::npos);
    }
    CHECK_THROWS_AS(complete_tuple(nats({12, 15}), Natural(2)), InvalidDeltaError);
    CHECK_THROWS_AS(complete_tuple(nats({6, 30}), Natural(8)), InvalidDeltaError); // 936/8 is odd
}

TEST_CASE("all_completions worked examples") {
    const auto table3 = all_completions(nats({210, 135}), ClassFilter::PrimitiveOnly);
    CHECK(deltas_of(table3) == nats({1, 9, 25, 225}));
    REQUIRE(table3.size() == 4);
    CHECK(table3[0].completion == 31162);
    CHECK(table3[1].completion == 3458);
    CHECK(table3[2].completion == 1234);
    CHECK(table3[3].completion == 26);

    CHECK(all_completions(nats({3, 5})).empty());
}

TEST_CASE("mixed-parity legs with even k open every admissible 2-exponent") {
    // four of the seven legs are odd, so 2 never divides the tuple gcd;
    // the four reference rows are primitive, and so are six more
    const std::vector<Natural> legs = nats({24, 57, 54, 33, 39, 21, 48});
    const auto primitive = all_completions(legs, ClassFilter::PrimitiveOnly);
    CHECK(deltas_of(primitive) == nats({2, 4, 8, 14, 16, 28, 32, 54, 56, 108}));

    const auto row = [&](std::uint64_t delta, std::uint64_t completion, std::uint64_t hyp) {
        const TupleSolution s = complete_tuple(legs, Natural(delta));
        CHECK(s.completion == completion);
        CHECK(s.hypotenuse == hyp);
        CHECK(s.primitive());
    };
    row(2, 3023, 3025);
    row(14, 425, 439);
    row(32, 173, 205);
    row(54, 85, 139);
    row(4, 1510, 1514); // beyond the reference rows, gcd still 1

    // non-primitive completions are exactly the ones with 3-exponent 1 or 2
    const auto nonprim = all_completions(legs, ClassFilter::NonPrimitiveOnly);
    CHECK(deltas_of(nonprim) == nats({6, 12, 18, 24, 36, 42, 48, 72, 84, 96}));

    // smallest mixed case with w = 2: (1,1,1,3) still has a primitive
    // completion through delta 2, unlike the all-even w = 2 case
    const auto tiny = all_completions(nats({1, 1, 1, 3}), ClassFilter::PrimitiveOnly);
    REQUIRE(tiny.size() == 1);
    CHECK(tiny[0].delta == 2);
    CHECK(tiny[0].completion == 2);
    CHECK(tiny[0].hypotenuse == 4);
    CHECK(predict_primitive_deltas_tuple(nats({1, 1, 1, 3})) == nats({2}));
}

TEST_CASE("gap-10 and gap-20 completions of (14, 98) have tuple gcd 1") {
    // the rows exist with these exact values, and the gcd over all four
    // entries really is 1, so they classify primitive
    const auto rows = all_completions(nats({14, 98}));
    CHECK(deltas_of(rows) == nats({2, 4, 10, 14, 20, 28, 50, 70, 98}));

    const TupleSolution ten = complete_tuple(nats({14, 98}), Natural(10));
    CHECK(ten.completion == 485);
    CHECK(ten.hypotenuse == 495);
    CHECK(gcd_all(nats({14, 98, 485, 495})) == 1);
    CHECK(ten.primitive());

    const TupleSolution twenty = complete_tuple(nats({14, 98}), Natural(20));
    CHECK(twenty.completion == 235);
    CHECK(twenty.hypotenuse == 255);
    CHECK(twenty.primitive());

    const auto nonprim = all_completions(nats({14, 98}), ClassFilter::NonPrimitiveOnly);
    CHECK(deltas_of(nonprim) == nats({14, 28, 70}));
}

TEST_CASE("predict_primitive_deltas_tuple worked examples") {
    CHECK(predict_primitive_deltas_tuple(nats({210, 135})) == nats({1, 9, 25, 225}));
    CHECK(predict_primitive_deltas_tuple(nats({6, 30})) == nats({2, 4, 18, 26}));
    // w = 2: no primitive completion can exist
    CHECK(predict_primitive_deltas_tuple(nats({2, 4})).empty());
    const TupleSolution only = complete_tuple(nats({2, 4}), Natural(2));
    CHECK(only.completion == 4);
    CHECK(only.hypotenuse == 6);
    CHECK_FALSE(only.primitive());
    CHECK(all_completions(nats({2, 4}), ClassFilter::PrimitiveOnly).empty());
}

TEST_CASE("oracle_completions worked examples and cap") {
    const auto c1215 = oracle_completions(nats({12, 15}));
    REQUIRE(c1215.size() == 3);
    CHECK(c1215[0].completion == 16);
    CHECK(c1215[1].completion == 60);
    CHECK(c1215[2].completion == 184);

    CHECK(oracle_completions(nats({3, 5})).empty());

    const auto c819 = oracle_completions(nats({8, 19}));
    REQUIRE(c819.size() == 3);
    CHECK(c819[0].completion == 4);
    CHECK(c819[1].completion == 40);
    CHECK(c819[2].completion == 212);

    CHECK_THROWS_AS(oracle_completions(nats({3000, 3000})), OracleCapExceededError);
}

TEST_CASE("completions are complete, sound and ordered on a random corpus") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 250; ++trial) {
        const std::size_t len = 1 + rng() % 6;
        std::vector<Natural> legs;
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < len; ++i) {
            const std::uint64_t v = 1 + rng() % 120;
            k += v * v;
            legs.emplace_back(v);
        }
        const auto solutions = all_completions(legs);
        std::set<std::pair<Natural, Natural>> enumerated;
        Natural previous_delta = 0;
        for (const TupleSolution& s : solutions) {
            Natural sum = 0;
            for (const Natural& leg : s.legs)
                sum += leg * leg;
            CHECK(sum + s.completion * s.completion == s.hypotenuse * s.hypotenuse);
            CHECK(s.hypotenuse == s.completion + s.delta);
            CHECK(s.delta > previous_delta);
            previous_delta = s.delta;
            enumerated.insert({s.completion, s.hypotenuse});
        }
        const auto scanned = scan_completions(k);
        REQUIRE(enumerated.size() == scanned.size());
        for (const auto& [c, d] : scanned)
            CHECK(enumerated.contains({Natural(c), Natural(d)}));
        // no completions exactly for k = 2 (mod 4) and the two degenerate sums
        CHECK(enumerated.empty() == (k % 4 == 2 || k == 1 || k == 4));
    }
}

TEST_CASE("tuple predictor equals gcd ground truth on a random corpus") {
    std::mt19937_64 rng(23);
    std::uint64_t w2_cases = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t len = 1 + rng() % 6;
        std::vector<Natural> legs;
        for (std::size_t i = 0; i < len; ++i)
            legs.emplace_back(1 + rng() % 200);
        const Natural k = sum_of_squares(legs);
        if (k % 4 == 0 && k % 8 != 0)
            ++w2_cases;
        CHECK(predict_primitive_deltas_tuple(legs) ==
              deltas_of(all_completions(legs, ClassFilter::PrimitiveOnly)));
    }
    CHECK(w2_cases > 0); // the corrected even rule is actually exercised
}

TEST_CASE("odd k always yields the gap-1 primitive completion") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t len = 1 + rng() % 6;
        std::vector<Natural> legs;
        for (std::size_t i = 0; i < len; ++i)
            legs.emplace_back(1 + rng() % 150);
        const Natural k = sum_of_squares(legs);
        if (is_even(k) || k < 3)
            continue;
        const TupleSolution s = complete_tuple(legs, Natural(1));
        CHECK(s.hypotenuse == s.completion + 1);
        CHECK(s.primitive());
    }
}

TEST_CASE("all-even legs with k divisible by 8 always yield the gap-2 primitive completion") {
    std::mt19937_64 rng(37);
    std::uint64_t exercised = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t len = 1 + rng() % 6;
        std::vector<Natural> legs;
        for (std::size_t i = 0; i < len; ++i)
            legs.emplace_back(2 * (1 + rng() % 75));
        const Natural k = sum_of_squares(legs);
        if (k % 8 != 0)
            continue; // w >= 3 required; w = 2 is the corrected no-primitive case
        ++exercised;
        const TupleSolution s = complete_tuple(legs, Natural(2));
        CHECK(s.primitive());
    }
    CHECK(exercised > 0);
}

TEST_CASE("a single leg reduces to the triple engine") {
    for (std::uint64_t a : {3ull, 15ull, 60ull, 99ull, 792ull}) {
        const auto completions = all_completions(nats({a}));
        const auto triples = all_triples(Natural(a));
        REQUIRE(completions.size() == triples.size());
        for (std::size_t i = 0; i < completions.size(); ++i) {
            CHECK(completions[i].delta == triples[i].delta);
            CHECK(completions[i].completion == triples[i].b);
            CHECK(completions[i].hypotenuse == triples[i].c);
            CHECK(completions[i].primitive() == triples[i].primitive());
        }
        CHECK(predict_primitive_deltas_tuple(nats({a})) == predict_primitive_deltas(Natural(a)));
    }
}
