#pragma once

#include "egl/strategy.hpp"

namespace egl {

// t >= 2 copies of K4 sharing the common edge uv. Vertices: u=0, v=1, copy i
// owns 2+2i and 3+2i; edges: uv plus five per copy.
HostGraph ht_host(int t);

// Number of K4 copies if the host is an H_t, otherwise -1.
int ht_copies(const HostGraph& host);

// First-player strategy for Clique(H_t): claim uv, claim the C_1 edge
// opposite uv after the opponent's first claim, block opposing triangles,
// build a double triangle threat in C_1, reply inside the opponent's copy.
// Any position the script does not cover falls back to solver policy moves.
class HtStrategy final : public Strategy {
public:
    HtStrategy(std::shared_ptr<const GameSpec> spec,
               SolveBudget budget = {});
    HtStrategy(const HtStrategy&) = default;

    Move choose(const Position& pos) const override;
    void notify(const Position& before, Move m) override;
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<HtStrategy>(*this);
    }
    std::string name() const override { return "ht"; }

private:
    std::optional<Move> scripted_move(const Position& pos) const;
    bool winning_child(const Position& pos, Move m) const;

    std::shared_ptr<const GameSpec> spec_;
    int t_;
    std::shared_ptr<Tablebase> tb_;  // shared lazy solve cache
    SolveBudget budget_;
    std::vector<std::array<int, 3>> triangles_;  // host triangles (vertices)
    int last_opp_edge_ = -1;
};

}  // namespace egl
