#include "chains.hpp"

#include <algorithm>

namespace pytuple {

namespace {

Natural min_delta_for(const Natural& hypotenuse) {
    return is_odd(hypotenuse) ? Natural(1) : Natural(2);
}

std::vector<Natural> expansion_deltas(const Chain& chain, std::uint64_t level,
                                      const ChainStrategy& strategy) {
    switch (strategy.mode) {
    case ChainMode::AllBranches:
        return valid_deltas(chain.hypotenuse, strategy.factor_budget);
    case ChainMode::PrimitiveTriplesOnly:
        return predict_primitive_deltas(chain.hypotenuse, strategy.factor_budget);
    case ChainMode::MinDelta:
        return {min_delta_for(chain.hypotenuse)};
    case ChainMode::FixedDeltaList:
        if (level >= strategy.fixed_deltas.size())
            throw InvalidDeltaError("fixed delta list is shorter than the requested depth");
        return {strategy.fixed_deltas[level]};
    }
    return {};
}

} // namespace

Chain seed_chain(const Natural& seed) {
    if (seed < 3)
        throw DomainError("chain seed must be at least 3");
    Chain chain;
    chain.legs = {seed};
    chain.hypotenuse = seed;
    return chain;
}

Chain extend(const Chain& chain, const Natural& delta) {
    Triple step = triple_from_delta(chain.hypotenuse, delta);
    Chain next = chain;
    next.legs.push_back(step.b);
    next.hypotenuse = step.c;
    next.deltas.push_back(delta);
    return next;
}

ChainSet build_chains(const Natural& seed, std::uint64_t depth, const ChainStrategy& strategy) {
    if (depth < 1)
        throw DomainError("chain depth must be at least 1");
    if (strategy.max_branches < 1)
        throw DomainError("max_branches must be at least 1");
    if (strategy.max_magnitude && seed > *strategy.max_magnitude)
        throw MagnitudeExceededError("seed " + to_decimal(seed) + " already exceeds the magnitude limit " +
                                     to_decimal(*strategy.max_magnitude));

    ChainSet result;
    std::vector<Chain> frontier{seed_chain(seed)};
    for (std::uint64_t level = 0; level < depth; ++level) {
        std::vector<Chain> next;
        for (const Chain& chain : frontier) {
            bool extended = false;
            for (const Natural& delta : expansion_deltas(chain, level, strategy)) {
                Chain child = extend(chain, delta);
                if (strategy.max_magnitude && child.hypotenuse > *strategy.max_magnitude)
                    continue;
                next.push_back(std::move(child));
                extended = true;
            }
            if (!extended && chain.depth() >= 1) {
                // nowhere left to grow: emit as-is, short of the target depth
                Chain capped = chain;
                capped.capped = true;
                result.chains.push_back(std::move(capped));
            }
        }
        if (next.size() > strategy.max_branches) {
            next.resize(strategy.max_branches);
            result.truncated = true;
        }
        frontier = std::move(next);
    }
    for (Chain& chain : frontier)
        result.chains.push_back(std::move(chain));
    std::sort(result.chains.begin(), result.chains.end(), [](const Chain& a, const Chain& b) {
        return std::lexicographical_compare(a.deltas.begin(), a.deltas.end(),
                                            b.deltas.begin(), b.deltas.end());
    });
    return result;
}

BranchClass classify_chain(const Chain& chain) {
    Natural hyp = chain.legs.at(0);
    for (std::size_t i = 1; i < chain.legs.size(); ++i) {
        const Natural next_hyp = chain.legs[i] + chain.deltas[i - 1];
        const Natural step[] = {hyp, chain.legs[i], next_hyp};
        if (gcd_all(std::span<const Natural>(step, 3)) != 1)
            return BranchClass::NonPrimitiveBranch;
        hyp = next_hyp;
    }
    return BranchClass::PrimitiveBranch;
}

bool identity_holds(const Chain& chain) {
    Natural sum = 0;
    for (const Natural& leg : chain.legs)
        sum += leg * leg;
    return sum == chain.hypotenuse * chain.hypotenuse;
}

} // namespace pytuple
