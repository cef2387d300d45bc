#ifndef PYTUPLE_VERIFY_HPP
#define PYTUPLE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "factorization.hpp"
#include "natural.hpp"

namespace pytuple {

struct Discrepancy {
    std::string input;
    std::string detail;
};

struct VerifyReport {
    std::string mode;
    std::uint64_t checked = 0;
    std::vector<Discrepancy> discrepancies;

    bool clean() const { return discrepancies.empty(); }
};

struct VerifyBounds {
    std::uint64_t max_leg = 0;     // 0 = mode default
    std::uint64_t max_m = 0;
    std::uint64_t max_k = 0;
    std::uint64_t corpus_size = 0;
    std::uint64_t factor_budget = kDefaultFactorBudget;
};

// Fixed random corpus of leg lists with k <= max_k, identical on every run,
// with the small worked examples appended. Shared by the tuple suites.
std::vector<std::vector<Natural>> tuple_corpus(std::uint64_t count, std::uint64_t max_k);

// Delta enumeration vs the O(a^2) scan, legs 1..max_leg (default 300).
VerifyReport verify_triples_oracle(const VerifyBounds& bounds = {});

// Completion enumeration vs the O(k) scan over the fixed corpus
// (default 300 cases, k <= 1e6).
VerifyReport verify_tuples_oracle(const VerifyBounds& bounds = {});

// Case-analysis predictors vs gcd ground truth: legs 1..max_leg
// (default 2000) plus the fixed tuple corpus (default 1000 cases, k <= 1e6).
VerifyReport verify_predictor(const VerifyBounds& bounds = {});

// Every primitive Euclid pair (m, n) with m <= max_m (default 50) must
// appear in the enumeration of both of its legs; also checks that the
// delta method reaches (15, 36, 39) while no Euclid pair with m <= 200 does.
VerifyReport verify_euclid_coverage(const VerifyBounds& bounds = {});

// Closed-form delta counts vs enumeration, legs 1..max_leg (default 2000).
VerifyReport verify_counts(const VerifyBounds& bounds = {});

// Dispatch by mode name: triples-oracle, tuples-oracle, predictor,
// euclid-coverage, counts. Throws DomainError for anything else.
VerifyReport run_verify(const std::string& mode, const VerifyBounds& bounds = {});

} // namespace pytuple

#endif
