#include "egl/game.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace egl {

std::string GameSpec::describe() const {
    std::ostringstream out;
    out << to_string(kind) << " p=" << p << " q=" << q << " host(n="
        << host.vertex_count() << ",m=" << host.edge_count() << ")";
    return out.str();
}

TurnState turn_state(int c1, int c2, const GameSpec& spec) {
    const int total = spec.host.edge_count();
    if (c1 < 0 || c2 < 0 || c1 + c2 > total)
        throw InconsistencyError("claim counts out of range");

    // Attribute the claims to whole turns in schedule order; the prefix must
    // end at a turn boundary or inside the mover's current turn.
    int r1 = c1, r2 = c2, rem = total;
    PlayerId mover = PlayerId::P1;
    while (true) {
        const bool is_p1 = (mover == PlayerId::P1);
        int& mine = is_p1 ? r1 : r2;
        const int theirs = is_p1 ? r2 : r1;
        if (rem == 0) return {mover, 0};  // terminal
        const int len = std::min(is_p1 ? spec.p : spec.q, rem);
        if (mine < len) {
            if (theirs != 0)
                throw InconsistencyError(
                    "claim counts unreachable under schedule");
            return {mover, len - mine};
        }
        mine -= len;
        rem -= len;
        mover = other(mover);
    }
}

Position::Position(const GameSpec& spec, EdgeSet claimed1, EdgeSet claimed2)
    : spec_(&spec), claimed1_(claimed1), claimed2_(claimed2) {
    if (claimed1_.intersects(claimed2_))
        throw std::domain_error("claimed sets overlap");
    if (!spec.host.all_edges().contains(claimed1_ | claimed2_))
        throw std::domain_error("claimed edge outside host");
    turn_state(claimed1_.count(), claimed2_.count(), spec);  // validates
}

Position Position::apply(Move m) const {
    const EdgeSet free = unclaimed();
    if (m.edge < 0 || m.edge >= spec_->host.edge_count() || !free.test(m.edge))
        throw std::domain_error("illegal move: edge not unclaimed");
    TurnState ts = turn();
    EdgeSet c1 = claimed1_, c2 = claimed2_;
    (ts.mover == PlayerId::P1 ? c1 : c2).set(m.edge);
    return Position(*spec_, c1, c2);
}

std::vector<Move> legal_moves(const Position& pos) {
    std::vector<Move> out;
    for (int e = pos.unclaimed().lowest(); e >= 0;
         e = pos.unclaimed().next_after(e))
        out.push_back({e});
    return out;
}

Position apply_move(const Position& pos, Move m) { return pos.apply(m); }

namespace {

// Branch and bound over bit-represented candidate sets; boards are tiny so
// exactness is cheap.
struct CliqueSearch {
    const std::vector<VertexSet>& adj;
    int best = 0;

    void expand(int size, VertexSet cand) {
        if (size + std::popcount(cand) <= best) return;
        while (cand) {
            if (size + std::popcount(cand) <= best) return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (size + 1 > best) best = size + 1;
            expand(size + 1, cand & adj[v]);
        }
    }
};

}  // namespace

int clique_number(const HostGraph& host, const EdgeSet& edges, VertexSet verts) {
    verts &= all_vertices(host.vertex_count());
    if (verts == 0) throw std::domain_error("clique number of empty vertex set");
    std::vector<VertexSet> adj(host.vertex_count(), 0);
    for (int e = edges.lowest(); e >= 0; e = edges.next_after(e)) {
        auto [i, j] = host.endpoints(e);
        if ((verts >> i & 1) && (verts >> j & 1)) {
            adj[i] |= VertexSet{1} << j;
            adj[j] |= VertexSet{1} << i;
        }
    }
    CliqueSearch search{adj};
    search.expand(0, verts);
    return search.best;
}

int clique_number(const HostGraph& host, const EdgeSet& edges) {
    return clique_number(host, edges, all_vertices(host.vertex_count()));
}

int max_degree(const HostGraph& host, const EdgeSet& edges, VertexSet verts) {
    verts &= all_vertices(host.vertex_count());
    if (verts == 0) throw std::domain_error("max degree of empty vertex set");
    std::vector<int> deg(host.vertex_count(), 0);
    int best = 0;
    for (int e = edges.lowest(); e >= 0; e = edges.next_after(e)) {
        auto [i, j] = host.endpoints(e);
        if ((verts >> i & 1) && (verts >> j & 1)) {
            best = std::max({best, ++deg[i], ++deg[j]});
        }
    }
    return best;
}

int max_degree(const HostGraph& host, const EdgeSet& edges) {
    return max_degree(host, edges, all_vertices(host.vertex_count()));
}

int structure_size(const GameSpec& spec, const EdgeSet& edges) {
    return spec.kind == GameKind::Clique
               ? clique_number(spec.host, edges)
               : max_degree(spec.host, edges);
}

PlayerId winner(const Position& pos) {
    if (!pos.is_terminal())
        throw std::domain_error("winner undefined on non-terminal position");
    const GameSpec& spec = pos.spec();
    const int s1 = structure_size(spec, pos.claimed1());
    const int s2 = structure_size(spec, pos.claimed2());
    if (spec.p1_needs_strict())
        return s1 > s2 ? PlayerId::P1 : PlayerId::P2;
    return s2 > s1 ? PlayerId::P2 : PlayerId::P1;
}

}  // namespace egl
