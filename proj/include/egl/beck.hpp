#pragma once

#include <vector>

#include "egl/strategy.hpp"

namespace egl {

struct RamseyConstants {
    static constexpr int R5_UPPER = 46;
    static constexpr int R4_EXACT = 18;  // housed for the S2'(H) variant
    static constexpr double kRamseyFloorBase = 3.999;
};

// log base 3.999 of n: the guaranteed monochromatic clique order in any
// 2-coloring of K_n for large n. Informational at small n.
double ramsey_floor(double n);

// C(n,k) * (q+1)^(-C(k,2)/p) compared against 1/(q+1). `holds` comes from an
// exact integer comparison; `value` is exact when the ratio is one of
// integers, otherwise a flagged log-space approximation.
struct BeckCondition {
    bool holds = false;
    long double value = 0.0L;
    bool exact = true;
    bool vacuous = false;  // C(n,k) = 0
};

BeckCondition beck_condition(long long n, int k, int p, int q);

// k := 1 + ceil(2p log_{q+1}(n)), plus whether n is large enough that
// k >= q + 2.
struct BiasThreshold {
    int k = 0;
    bool large_enough = false;
};

BiasThreshold bias_threshold_k(double n, int p, int q);

// Whether q+1 > 3.999^(2p), the hypothesis under which the biased game is a
// second-player win for large n.
bool bias_hypothesis_holds(int p, int q);

// Potential of a position for the Breaker: the sum over k-vertex host
// cliques with no Breaker-claimed internal edge of (q+1)^(-u/p), u the
// number of unclaimed internal edges.
long double beck_potential(const GameSpec& spec, int k, const EdgeSet& maker,
                           const EdgeSet& breaker);

// Breaker (Player 2) strategy: claim the edge maximizing the potential drop,
// lowest edge id among maximizers. Requires the condition to hold on the
// initial board.
class BeckBreakerStrategy final : public Strategy {
public:
    BeckBreakerStrategy(std::shared_ptr<const GameSpec> spec, int k);

    Move choose(const Position& pos) const override;
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<BeckBreakerStrategy>(*this);
    }
    std::string name() const override { return "beck"; }

    int target_k() const { return k_; }

private:
    std::shared_ptr<const GameSpec> spec_;
    int k_;
    std::vector<VertexSet> subsets_;  // k-vertex host cliques
};

}  // namespace egl
