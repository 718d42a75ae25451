#include "egl/registry.hpp"

#include "egl/beck.hpp"
#include "egl/ht.hpp"
#include "egl/lifts.hpp"
#include "egl/star_lifts.hpp"
#include "egl/virtual_board.hpp"

namespace egl {

std::vector<std::string> strategy_names() {
    return {"lowest",        "policy",       "steal",
            "clique-lift+1", "clique-lift+2", "clique-lift+3",
            "star-lift+1",   "star-lift+2",  "beck",
            "ht"};
}

std::unique_ptr<Strategy> base_policy_strategy(GameKind kind, int n,
                                               PlayerId side,
                                               const SolveBudget& budget) {
    auto spec =
        std::make_shared<const GameSpec>(kind, HostGraph::complete(n));
    auto tb = std::make_shared<Tablebase>(*spec);
    SolveOptions options;
    options.budget = budget;
    auto result = solve(Position::initial(*spec), *tb, options);
    if (!result.solved())
        throw UsageError("base game did not solve within budget");
    if (*result.winner != side)
        throw UsageError(std::string("base premise unavailable: ") +
                         to_string(kind) + "(" + std::to_string(n) +
                         ") is a " + to_string(*result.winner) + " win, not " +
                         to_string(side));
    return std::make_unique<TablebaseStrategy>(spec, side, tb);
}

std::unique_ptr<Strategy> make_strategy(const std::string& name,
                                        const StrategyContext& ctx) {
    if (!ctx.spec) throw UsageError("strategy context has no game spec");

    if (name == "lowest") return std::make_unique<LowestEdgeStrategy>();

    if (name == "policy") {
        auto tb = std::make_shared<Tablebase>(*ctx.spec);
        return std::make_unique<TablebaseStrategy>(ctx.spec, ctx.side, tb);
    }
    if (name == "steal") {
        auto tb = std::make_shared<Tablebase>(*ctx.spec);
        auto s2 = std::make_unique<TablebaseStrategy>(ctx.spec, PlayerId::P2,
                                                      tb);
        return steal_transform(ctx.spec, std::move(s2));
    }
    if (name == "clique-lift+1")
        return std::make_unique<CliqueLiftPlus1>(
            ctx.spec, ctx.base_n,
            base_policy_strategy(GameKind::Clique, ctx.base_n, PlayerId::P1,
                                 ctx.budget));
    if (name == "clique-lift+2")
        return std::make_unique<CliqueLiftPlus2>(
            ctx.spec, ctx.base_n,
            base_policy_strategy(GameKind::Clique, ctx.base_n, PlayerId::P1,
                                 ctx.budget));
    if (name == "clique-lift+3")
        return std::make_unique<CliqueLiftPlus3>(
            ctx.spec, ctx.base_n,
            base_policy_strategy(GameKind::Clique, ctx.base_n, PlayerId::P1,
                                 ctx.budget));
    if (name == "star-lift+1")
        return std::make_unique<StarLiftPlus1>(
            ctx.spec, ctx.base_n,
            base_policy_strategy(GameKind::Star, ctx.base_n, PlayerId::P1,
                                 ctx.budget));
    if (name == "star-lift+2")
        return std::make_unique<StarLiftPlus2>(
            ctx.spec, ctx.base_n,
            base_policy_strategy(GameKind::Star, ctx.base_n, PlayerId::P1,
                                 ctx.budget));
    if (name == "beck") {
        if (ctx.k < 2) throw UsageError("the breaker strategy needs --k >= 2");
        return std::make_unique<BeckBreakerStrategy>(ctx.spec, ctx.k);
    }
    if (name == "ht") return std::make_unique<HtStrategy>(ctx.spec, ctx.budget);

    throw UsageError("unknown strategy '" + name + "'");
}

}  // namespace egl
