#ifndef PYTUPLE_CHAINS_HPP
#define PYTUPLE_CHAINS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "natural.hpp"
#include "triples.hpp"

namespace pytuple {

// A tuple grown from a single seed by repeatedly forming a triple on the
// running hypotenuse: legs = (a_1, ..., a_{n-1}), and the sum of squared
// legs equals hypotenuse^2 at every depth. The fresh seed chain has
// legs = {seed} and hypotenuse = seed, which satisfies the identity
// trivially and makes the first extension a plain triple on the seed.
struct Chain {
    std::vector<Natural> legs;
    Natural hypotenuse;
    std::vector<Natural> deltas; // the gap chosen at each extension
    bool capped = false;         // stopped before the requested depth (magnitude limit)

    std::uint64_t depth() const { return deltas.size(); }
};

enum class ChainMode {
    AllBranches,
    PrimitiveTriplesOnly,
    MinDelta,       // 1 for an odd hypotenuse, 2 for an even one; never factorizes
    FixedDeltaList, // follow `fixed_deltas` exactly
};

struct ChainStrategy {
    ChainMode mode = ChainMode::AllBranches;
    std::uint64_t max_branches = 10'000;        // per-level width limit
    std::optional<Natural> max_magnitude;       // hypotenuse growth cutoff
    std::vector<Natural> fixed_deltas;          // FixedDeltaList only
    std::uint64_t factor_budget = kDefaultFactorBudget;
};

struct ChainSet {
    std::vector<Chain> chains;
    bool truncated = false; // some branches were dropped by max_branches
};

enum class BranchClass { PrimitiveBranch, NonPrimitiveBranch };

Chain seed_chain(const Natural& seed);

// Appends the leg (hypotenuse^2 - delta^2) / (2 delta) and replaces the
// hypotenuse; the step is validated arithmetically, without factorizing.
Chain extend(const Chain& chain, const Natural& delta);

// Breadth-first expansion to `depth`, branches ordered by delta at each
// level. Chains that would outgrow max_magnitude are kept at their last
// admissible depth and flagged capped; dropping branches to satisfy
// max_branches flags the whole set truncated.
ChainSet build_chains(const Natural& seed, std::uint64_t depth, const ChainStrategy& strategy);

// PrimitiveBranch iff every constituent triple along the chain is primitive.
BranchClass classify_chain(const Chain& chain);

// Exact recomputation of the chain identity.
bool identity_holds(const Chain& chain);

} // namespace pytuple

#endif
