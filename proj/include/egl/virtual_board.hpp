#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "egl/strategy.hpp"

namespace egl {

// Bookkeeping for running a strategy on a pretend board while emitting legal
// real moves. `gifted` holds real edges treated as opponent-claimed in the
// accounting though unclaimed (or later self-claimed) on the real board;
// `extras` holds real self claims that the virtual game never sees.
struct VirtualBoard {
    std::shared_ptr<const GameSpec> vspec;
    std::vector<int> v2r;  // virtual vertex -> real vertex
    std::vector<int> r2v;  // real vertex -> virtual vertex, -1 outside

    EdgeSet vclaim1, vclaim2;     // virtual claims by virtual player
    PlayerId vturn = PlayerId::P1;
    PlayerId self_virtual = PlayerId::P1;  // which virtual side we play

    EdgeSet gifted;  // real edge ids
    EdgeSet extras;  // real edge ids

    static VirtualBoard make(std::shared_ptr<const GameSpec> vspec,
                             std::vector<int> v2r, PlayerId self_virtual,
                             const HostGraph& real_host);

    const EdgeSet& vclaim(PlayerId p) const {
        return p == PlayerId::P1 ? vclaim1 : vclaim2;
    }
    bool vcomplete() const {
        return vclaim1.count() + vclaim2.count() == vspec->host.edge_count();
    }
    bool self_to_move() const {
        return !vcomplete() && vturn == self_virtual;
    }

    std::optional<int> real_to_virtual_edge(const HostGraph& real_host,
                                            int real_edge) const;
    int virtual_to_real_edge(const HostGraph& real_host, int vedge) const;

    // The virtual game as a Position; faults if the claim counts drifted off
    // the alternating schedule.
    Position virtual_position() const;

    // Claims `vedge` for the side to move and flips the turn.
    void apply_virtual(int vedge);

    // Marks real edges as the opponent's in the accounting. Edges whose image
    // lies on the virtual board are claimed there for the virtual opponent
    // immediately, without advancing the turn.
    void gift(const HostGraph& real_host, const EdgeSet& real_edges);

    // Pretend claims of the real opponent: their real claims plus all gifts.
    EdgeSet accounted_opponent(const Position& real_pos,
                               PlayerId real_self) const {
        return real_pos.claimed(other(real_self)) | gifted;
    }

    // One side's virtual claims as real edge ids.
    EdgeSet map_claims_to_real(const HostGraph& real_host, PlayerId side) const {
        EdgeSet out;
        const EdgeSet& claims = vclaim(side);
        for (int e = claims.lowest(); e >= 0; e = claims.next_after(e))
            out.set(virtual_to_real_edge(real_host, e));
        return out;
    }
};

// Mechanical executor realizing the gift/skip rules:
//   (a) the inner strategy's virtual move is played as its real image;
//   (b) when the inner strategy cannot act, or its edge is already among the
//       extras, the lowest-indexed unclaimed real edge is claimed instead;
//   (c) opponent claims of gifted edges are already accounted; other opponent
//       moves that land on the virtual board are fed to the inner strategy;
//   (d) gifting marks edges opponent-claimed on the virtual board at once.
class VirtualExecutorStrategy final : public Strategy {
public:
    VirtualExecutorStrategy(std::shared_ptr<const GameSpec> real_spec,
                            PlayerId real_self,
                            std::shared_ptr<const GameSpec> vspec,
                            std::vector<int> v2r, PlayerId self_virtual,
                            std::unique_ptr<Strategy> inner);

    VirtualExecutorStrategy(const VirtualExecutorStrategy& o);

    Move choose(const Position& pos) const override;
    void notify(const Position& before, Move m) override;
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<VirtualExecutorStrategy>(*this);
    }
    std::string name() const override { return "virtual-executor"; }

    VirtualBoard& board() { return vb_; }
    const VirtualBoard& board() const { return vb_; }
    const Strategy& inner() const { return *inner_; }
    PlayerId real_self() const { return real_self_; }

    void gift(const EdgeSet& real_edges) {
        vb_.gift(real_spec_->host, real_edges);
    }
    // Installs a virtual move for self made before the executor took over
    // (an opener already on the real board).
    void seed_self_move(int vedge);

private:
    std::shared_ptr<const GameSpec> real_spec_;
    PlayerId real_self_;
    VirtualBoard vb_;
    std::unique_ptr<Strategy> inner_;
};

// Spec-facing constructor: embeds `inner` (playing `self_virtual` on `vspec`)
// into the real game as `real_self` through the vertex mapping.
std::unique_ptr<VirtualExecutorStrategy> virtual_executor(
    std::shared_ptr<const GameSpec> real_spec, PlayerId real_self,
    std::shared_ptr<const GameSpec> vspec, std::vector<int> v2r,
    PlayerId self_virtual, std::unique_ptr<Strategy> inner);

// Executor rules as free functions, shared with strategies that intercept
// moves around the virtual sub-game.

// Rule (a)/(b) for choose: the inner move's real image, or the lowest
// unclaimed real edge when that image sits among the extras.
Move executor_choose(const VirtualBoard& vb, const Strategy& inner,
                     const GameSpec& real_spec, const Position& pos);
// Bookkeeping for our own real move m while the virtual game awaits us.
void executor_apply_self(VirtualBoard& vb, Strategy& inner,
                         const GameSpec& real_spec, Move m);
// Rule (c)/(d) for an opponent real move; true when the move was gifted,
// already accounted, or applied to the virtual board.
void executor_apply_opponent(VirtualBoard& vb, Strategy& inner,
                             const GameSpec& real_spec, Move m);

// First-player strategy from a second-player one: an arbitrary (lowest) first
// claim goes into the extras, then s2 runs as if it were still the second
// player on the same board.
std::unique_ptr<VirtualExecutorStrategy> steal_transform(
    std::shared_ptr<const GameSpec> spec, std::unique_ptr<Strategy> s2);

}  // namespace egl
