#include "egl/ht.hpp"

#include <array>

namespace egl {

HostGraph ht_host(int t) {
    if (t < 2) throw std::domain_error("ht_host needs t >= 2");
    std::vector<std::pair<int, int>> edges;
    edges.emplace_back(0, 1);  // the shared edge uv
    for (int i = 0; i < t; ++i) {
        int a = 2 + 2 * i, b = 3 + 2 * i;
        edges.emplace_back(0, a);
        edges.emplace_back(0, b);
        edges.emplace_back(1, a);
        edges.emplace_back(1, b);
        edges.emplace_back(a, b);
    }
    return HostGraph::from_edges(2 + 2 * t, std::move(edges));
}

int ht_copies(const HostGraph& host) {
    int n = host.vertex_count();
    if (n < 6 || n % 2 != 0) return -1;
    int t = (n - 2) / 2;
    if (!(host == ht_host(t))) return -1;
    return t;
}

namespace {

std::vector<std::array<int, 3>> host_triangles(const HostGraph& host) {
    std::vector<std::array<int, 3>> out;
    const int n = host.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (host.has_edge(a, b) && host.has_edge(a, c) &&
                    host.has_edge(b, c))
                    out.push_back({a, b, c});
    return out;
}

// Unclaimed edges each of which would complete a triangle for `mine`.
EdgeSet completing_edges(const HostGraph& host,
                         const std::vector<std::array<int, 3>>& triangles,
                         const EdgeSet& mine, const EdgeSet& theirs) {
    EdgeSet out;
    for (const auto& [a, b, c] : triangles) {
        const int e1 = host.edge_index(a, b);
        const int e2 = host.edge_index(a, c);
        const int e3 = host.edge_index(b, c);
        const std::array<std::array<int, 3>, 3> rotations{
            {{e1, e2, e3}, {e2, e3, e1}, {e3, e1, e2}}};
        for (const auto& [x, y, last] : rotations) {
            if (mine.test(x) && mine.test(y) && !mine.test(last) &&
                !theirs.test(last))
                out.set(last);
        }
    }
    return out;
}

// Which K4 copy an edge belongs to; -1 for the shared edge uv.
int edge_copy(const HostGraph& host, int edge) {
    auto [i, j] = host.endpoints(edge);
    if (j <= 1) return -1;
    return (j - 2) / 2;
}

}  // namespace

HtStrategy::HtStrategy(std::shared_ptr<const GameSpec> spec,
                       SolveBudget budget)
    : spec_(std::move(spec)), budget_(budget) {
    t_ = ht_copies(spec_->host);
    if (t_ < 0 || spec_->kind != GameKind::Clique || spec_->p != 1 ||
        spec_->q != 1)
        throw std::domain_error(
            "ht strategy needs the unbiased clique game on an H_t host");
    tb_ = std::make_shared<Tablebase>(*spec_);
    triangles_ = host_triangles(spec_->host);
}

std::optional<Move> HtStrategy::scripted_move(const Position& pos) const {
    const HostGraph& host = spec_->host;
    const EdgeSet& mine = pos.claimed1();
    const EdgeSet& theirs = pos.claimed2();
    const int uv = host.edge_index(0, 1);

    if (mine.none() && theirs.none()) return Move{uv};

    EdgeSet complete_now = completing_edges(host, triangles_, mine, theirs);
    EdgeSet their_threats = completing_edges(host, triangles_, theirs, mine);
    if (!complete_now.none() && their_threats.none())
        return Move{complete_now.lowest()};
    if (!their_threats.none()) return Move{their_threats.lowest()};

    // The C_1 edge opposite uv, once the opponent has spent a claim.
    const int opposite = host.edge_index(2, 3);
    if (mine.test(uv) && !theirs.none() && pos.unclaimed().test(opposite))
        return Move{opposite};

    if (last_opp_edge_ >= 0) {
        int copy = edge_copy(host, last_opp_edge_);
        if (copy >= 0) {
            int a = 2 + 2 * copy, b = 3 + 2 * copy;
            EdgeSet in_copy;
            for (int v : {a, b}) in_copy |= host.incident(v);
            in_copy &= pos.unclaimed();
            if (!in_copy.none()) return Move{in_copy.lowest()};
        }
    }
    return std::nullopt;
}

bool HtStrategy::winning_child(const Position& pos, Move m) const {
    SolveOptions options;
    options.budget = budget_;
    return solve_value(pos.apply(m), *tb_, options) == PlayerId::P1;
}

Move HtStrategy::choose(const Position& pos) const {
    if (auto scripted = scripted_move(pos)) {
        if (winning_child(pos, *scripted)) return *scripted;
    }
    // Scripted play is ambiguous or unsound here: take a solver move.
    for (Move m : legal_moves(pos))
        if (winning_child(pos, m)) return m;
    return lowest_legal(pos);
}

void HtStrategy::notify(const Position& before, Move m) {
    if (before.turn().mover == PlayerId::P2) last_opp_edge_ = m.edge;
}

}  // namespace egl
