#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "egl/edge_set.hpp"
#include "egl/host_graph.hpp"

namespace egl {

enum class PlayerId : std::uint8_t { P1 = 1, P2 = 2 };

inline PlayerId other(PlayerId p) {
    return p == PlayerId::P1 ? PlayerId::P2 : PlayerId::P1;
}
inline const char* to_string(PlayerId p) {
    return p == PlayerId::P1 ? "P1" : "P2";
}

enum class GameKind : std::uint8_t { Clique, Star };

inline const char* to_string(GameKind k) {
    return k == GameKind::Clique ? "clique" : "star";
}

// Claim counts that cannot arise under the biased turn schedule.
struct InconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Which game: clique or star building, the host board, and the bias.
// Player 1 claims p edges per turn, Player 2 claims q, final partial turns
// truncated. The tie convention follows the bias: the player who claims at
// least as many edges per turn must finish strictly larger to win.
struct GameSpec {
    GameKind kind;
    HostGraph host;
    int p = 1;
    int q = 1;

    GameSpec(GameKind kind_, HostGraph host_, int p_ = 1, int q_ = 1)
        : kind(kind_), host(std::move(host_)), p(p_), q(q_) {
        if (p < 1 || q < 1) throw std::domain_error("bias must be positive");
        if (kind == GameKind::Star && (p != 1 || q != 1))
            throw std::domain_error("biased star games are not defined");
        if (host.vertex_count() < 1)
            throw std::domain_error("host needs at least one vertex");
    }

    // True when Player 1 must finish strictly larger to win.
    bool p1_needs_strict() const { return p >= q; }

    std::string describe() const;
};

struct Move {
    int edge = -1;
    bool operator==(const Move&) const = default;
};

struct TurnState {
    PlayerId mover;
    int remaining;  // single-edge claims left in the current turn; 0 at terminal
    bool operator==(const TurnState&) const = default;
};

// Replays the biased schedule from (0,0); throws InconsistencyError when the
// claim counts cannot arise under it.
TurnState turn_state(int c1, int c2, const GameSpec& spec);

// Two disjoint claimed edge sets plus the spec they live on. Turn state is
// derived from the claim counts, never stored, so positions stay
// value-comparable from the colored graph alone.
class Position {
public:
    Position(const GameSpec& spec, EdgeSet claimed1, EdgeSet claimed2);
    static Position initial(const GameSpec& spec) {
        return Position(spec, EdgeSet{}, EdgeSet{});
    }

    const GameSpec& spec() const { return *spec_; }
    const EdgeSet& claimed(PlayerId p) const {
        return p == PlayerId::P1 ? claimed1_ : claimed2_;
    }
    const EdgeSet& claimed1() const { return claimed1_; }
    const EdgeSet& claimed2() const { return claimed2_; }
    EdgeSet unclaimed() const {
        return spec_->host.all_edges() - claimed1_ - claimed2_;
    }

    bool is_terminal() const {
        return claimed1_.count() + claimed2_.count() ==
               spec_->host.edge_count();
    }
    TurnState turn() const {
        return turn_state(claimed1_.count(), claimed2_.count(), *spec_);
    }

    Position apply(Move m) const;

    bool operator==(const Position& o) const {
        return claimed1_ == o.claimed1_ && claimed2_ == o.claimed2_;
    }

private:
    const GameSpec* spec_;
    EdgeSet claimed1_;
    EdgeSet claimed2_;
};

std::vector<Move> legal_moves(const Position& pos);
Position apply_move(const Position& pos, Move m);

// Total on terminal positions; throws on non-terminal ones.
PlayerId winner(const Position& pos);

// Size of the largest clique spanned by `edges` restricted to `verts`.
// A nonempty vertex set with no edges has clique number 1.
int clique_number(const HostGraph& host, const EdgeSet& edges, VertexSet verts);
int clique_number(const HostGraph& host, const EdgeSet& edges);

// Largest degree in the claimed subgraph restricted to `verts`; 0 if edgeless.
int max_degree(const HostGraph& host, const EdgeSet& edges, VertexSet verts);
int max_degree(const HostGraph& host, const EdgeSet& edges);

// The structure size the game compares: clique number or max degree.
int structure_size(const GameSpec& spec, const EdgeSet& edges);

}  // namespace egl
