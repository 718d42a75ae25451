#pragma once

#include <memory>
#include <string>
#include <vector>

#include "egl/strategy.hpp"

namespace egl {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StrategyContext {
    std::shared_ptr<const GameSpec> spec;  // the real game
    PlayerId side = PlayerId::P2;          // the player the strategy controls
    int base_n = 0;                        // lift base size
    int k = 0;                             // breaker target clique size
    SolveBudget budget;
};

// Strategies addressable by name for the CLI and the verifier. Lift bases
// are solver policies extracted from the base game; a missing premise (the
// base game is not a first-player win) raises a UsageError diagnostic.
std::unique_ptr<Strategy> make_strategy(const std::string& name,
                                        const StrategyContext& ctx);

std::vector<std::string> strategy_names();

// Builds the solver-backed first-player policy for Clique(n) or Star(n).
std::unique_ptr<Strategy> base_policy_strategy(GameKind kind, int n,
                                               PlayerId side,
                                               const SolveBudget& budget);

}  // namespace egl
