#include "egl/star_lifts.hpp"

#include <algorithm>

namespace egl {

namespace {

std::shared_ptr<const GameSpec> star_subspec(int n) {
    return std::make_shared<const GameSpec>(GameKind::Star,
                                            HostGraph::complete(n));
}

std::vector<int> vertices_except(int n, std::initializer_list<int> excl) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (std::find(excl.begin(), excl.end(), v) == excl.end())
            out.push_back(v);
    return out;
}

std::vector<int> seeded_mapping(const std::vector<int>& sub_vertices,
                                std::pair<int, int> opener_virtual,
                                std::pair<int, int> opener_real) {
    std::vector<int> v2r(sub_vertices.size(), -1);
    v2r[opener_virtual.first] = opener_real.first;
    v2r[opener_virtual.second] = opener_real.second;
    std::vector<int> rest;
    for (int r : sub_vertices)
        if (r != opener_real.first && r != opener_real.second)
            rest.push_back(r);
    std::size_t next = 0;
    for (std::size_t v = 0; v < v2r.size(); ++v)
        if (v2r[v] < 0) v2r[v] = rest[next++];
    return v2r;
}

void require_star_host(const GameSpec& spec, int expected_n, const char* who) {
    if (!spec.host.is_complete() || spec.host.vertex_count() != expected_n ||
        spec.kind != GameKind::Star)
        throw std::domain_error(std::string(who) +
                                ": spec must be the star game on the "
                                "complete host of matching order");
}

}  // namespace

// ---------------------------------------------------------------------------
// StarLiftPlus1

StarLiftPlus1::StarLiftPlus1(std::shared_ptr<const GameSpec> spec, int n,
                             std::unique_ptr<Strategy> base)
    : spec_(std::move(spec)), n_(n), base_(std::move(base)) {
    if (n_ < 3) throw std::domain_error("star-lift+1 needs n >= 3");
    require_star_host(*spec_, n_ + 1, "star-lift+1");
}

StarLiftPlus1::StarLiftPlus1(const StarLiftPlus1& o)
    : spec_(o.spec_),
      n_(o.n_),
      base_(o.base_ ? o.base_->clone() : nullptr),
      phase_(o.phase_),
      red1_(o.red1_),
      v_(o.v_),
      v_reply_pending_(o.v_reply_pending_),
      vb_(o.vb_) {}

Move StarLiftPlus1::choose(const Position& pos) const {
    const HostGraph& host = spec_->host;
    switch (phase_) {
        case 1: {
            // Lowest edge avoiding both endpoints of the opponent's opener.
            auto [u, v] = host.endpoints(red1_);
            EdgeSet avoid = host.incident(u) | host.incident(v);
            EdgeSet candidates = pos.unclaimed() - avoid;
            int e = candidates.lowest();
            if (e < 0) throw StrategyFault("no edge avoiding the first move");
            return Move{e};
        }
        case 2: {
            if (v_reply_pending_) {
                EdgeSet at_v = host.incident(v_) & pos.unclaimed();
                int e = at_v.lowest();
                if (e >= 0) return Move{e};
                return lowest_legal(pos);  // all v-edges claimed: skip
            }
            if (vb_.self_to_move())
                return executor_choose(vb_, *base_, *spec_, pos);
            return lowest_legal(pos);  // skip
        }
        default:
            throw StrategyFault("star-lift+1 asked to move out of turn");
    }
}

void StarLiftPlus1::notify(const Position& before, Move m) {
    const HostGraph& host = spec_->host;
    const bool own = before.turn().mover == PlayerId::P2;
    switch (phase_) {
        case 0: {
            red1_ = m.edge;
            v_ = host.endpoints(m.edge).second;  // higher endpoint
            phase_ = 1;
            return;
        }
        case 1: {
            // Our opener doubles as the base strategy's first move on the
            // sub-board without v.
            auto vspec = star_subspec(n_);
            Move opener = base_->choose(Position::initial(*vspec));
            auto [oa, ob] = vspec->host.endpoints(opener.edge);
            auto [ra, rb] = host.endpoints(m.edge);
            vb_ = VirtualBoard::make(
                vspec,
                seeded_mapping(
                    vertices_except(host.vertex_count(), {v_}), {oa, ob},
                    {ra, rb}),
                PlayerId::P1, host);
            base_->notify(vb_.virtual_position(), opener);
            vb_.apply_virtual(opener.edge);
            phase_ = 2;
            return;
        }
        case 2: {
            if (own) {
                if (v_reply_pending_) {
                    v_reply_pending_ = false;
                    vb_.extras.set(m.edge);
                } else if (vb_.self_to_move()) {
                    executor_apply_self(vb_, *base_, *spec_, m);
                } else {
                    vb_.extras.set(m.edge);
                }
                return;
            }
            auto [a, b] = host.endpoints(m.edge);
            if (a == v_ || b == v_) {
                v_reply_pending_ = true;
                return;
            }
            executor_apply_opponent(vb_, *base_, *spec_, m);
            return;
        }
        default:
            throw StrategyFault("star-lift+1 notify out of phase");
    }
}

// ---------------------------------------------------------------------------
// StarLiftPlus2

StarLiftPlus2::StarLiftPlus2(std::shared_ptr<const GameSpec> spec, int n,
                             std::unique_ptr<Strategy> base)
    : spec_(std::move(spec)), n_(n), base_(std::move(base)) {
    if (n_ < 3) throw std::domain_error("star-lift+2 needs n >= 3");
    require_star_host(*spec_, n_ + 2, "star-lift+2");
}

StarLiftPlus2::StarLiftPlus2(const StarLiftPlus2& o)
    : spec_(o.spec_),
      n_(o.n_),
      base_(o.base_ ? o.base_->clone() : nullptr),
      phase_(o.phase_),
      red1_(o.red1_),
      blue1_(o.blue1_),
      tag_(o.tag_),
      kind_(o.kind_),
      v1_(o.v1_), v2_(o.v2_), w1_(o.w1_), w2_(o.w2_),
      missing_(o.missing_),
      partner_(o.partner_),
      pair_reply_pending_(o.pair_reply_pending_),
      vb_(o.vb_) {}

Move StarLiftPlus2::choose(const Position& pos) const {
    const HostGraph& host = spec_->host;
    switch (phase_) {
        case 1: {
            auto [a, b] = host.endpoints(red1_);
            EdgeSet near = (host.incident(a) | host.incident(b)) &
                           pos.unclaimed();
            int e = near.lowest();
            if (e < 0) throw StrategyFault("no unclaimed incident edge");
            return Move{e};
        }
        case 3:
            return Move{missing_};
        case 4: {
            if (pair_reply_pending_ >= 0) {
                if (!pos.unclaimed().test(pair_reply_pending_))
                    throw StrategyFault("pairing partner already claimed");
                return Move{pair_reply_pending_};
            }
            if (vb_.self_to_move())
                return executor_choose(vb_, *base_, *spec_, pos);
            return lowest_legal(pos);  // skip
        }
        default:
            throw StrategyFault("star-lift+2 asked to move out of turn");
    }
}

void StarLiftPlus2::install(const Position& after) {
    const HostGraph& host = spec_->host;

    // The five second-move states mapped onto S3/S4 with the paper's labels:
    // A -> S4, B -> S4, C -> S3, D -> S4, E -> S3.
    auto reds = after.claimed1().to_vector();
    auto [p1, q1] = host.endpoints(reds[0]);
    auto [p2, q2] = host.endpoints(reds[1]);
    auto [x, y] = host.endpoints(blue1_);

    int c = -1;
    if (p1 == p2 || p1 == q2) c = p1;
    else if (q1 == p2 || q1 == q2) c = q1;

    EdgeSet claimed = after.claimed1() | after.claimed2();
    auto lowest_isolated = [&]() {
        for (int v = 0; v < host.vertex_count(); ++v)
            if (!claimed.intersects(host.incident(v))) return v;
        throw StrategyFault("no isolated vertex available");
    };

    if (c >= 0) {
        kind_ = Kind::S4;
        const int l1 = std::min(p1 == c ? q1 : p1, p2 == c ? q2 : p2);
        const int l2 = std::max(p1 == c ? q1 : p1, p2 == c ? q2 : p2);
        w1_ = l1;
        w2_ = l2;
        v1_ = c;  // both red edges sit at v1
        if (x == c || y == c) {
            tag_ = 'D';
            v2_ = x == c ? y : x;          // the blue edge is already v1 v2
            missing_ = host.edge_index(w1_, w2_);  // the K_n blue edge
        } else {
            tag_ = ((x == l1 && y == l2) || (x == l2 && y == l1)) ? 'B' : 'A';
            v2_ = lowest_isolated();
            missing_ = host.edge_index(v1_, v2_);
        }
    } else {
        kind_ = Kind::S3;
        auto partner_of = [&](int v) -> int {
            if (v == p1) return q1;
            if (v == q1) return p1;
            if (v == p2) return q2;
            if (v == q2) return p2;
            return -1;
        };
        const int px = partner_of(x), py = partner_of(y);
        if (px >= 0 && py >= 0) {
            tag_ = 'C';
            v1_ = px;
            v2_ = py;
            w1_ = x;
            w2_ = y;
        } else {
            tag_ = 'E';
            const int t = px >= 0 ? x : y;
            v1_ = partner_of(t);
            w1_ = t;
            const bool t_edge_is_first =
                (t == p1 || t == q1);
            auto [d1, d2] = t_edge_is_first ? std::pair{p2, q2}
                                            : std::pair{p1, q1};
            v2_ = std::min(d1, d2);
            w2_ = std::max(d1, d2);
        }
        missing_ = host.edge_index(v1_, v2_);
    }
}

void StarLiftPlus2::notify(const Position& before, Move m) {
    const HostGraph& host = spec_->host;
    const bool own = before.turn().mover == PlayerId::P2;
    switch (phase_) {
        case 0:
            red1_ = m.edge;
            phase_ = 1;
            return;
        case 1:
            blue1_ = m.edge;
            phase_ = 2;
            return;
        case 2:
            install(before.apply(m));
            phase_ = 3;
            return;
        case 3: {
            if (!own || m.edge != missing_)
                throw StrategyFault("expected the S3/S4 completing move");
            Position after = before.apply(m);

            // Pairing over the unclaimed v1/v2-incident edges.
            partner_.clear();
            auto add_pair = [&](int e1, int e2) {
                if (!after.unclaimed().test(e1) || !after.unclaimed().test(e2))
                    throw StrategyFault("pairing over a claimed edge");
                partner_[e1] = e2;
                partner_[e2] = e1;
            };
            for (int w = 0; w < host.vertex_count(); ++w) {
                if (w == v1_ || w == v2_ || w == w1_ || w == w2_) continue;
                add_pair(host.edge_index(v1_, w), host.edge_index(v2_, w));
            }
            if (kind_ == Kind::S3)
                add_pair(host.edge_index(v1_, w2_), host.edge_index(v2_, w1_));
            else
                add_pair(host.edge_index(v2_, w1_), host.edge_index(v2_, w2_));

            // Every unclaimed v-incident edge must be paired.
            EdgeSet v_edges = (host.incident(v1_) | host.incident(v2_)) &
                              after.unclaimed();
            if (static_cast<int>(partner_.size()) != v_edges.count())
                throw StrategyFault("pairing does not cover the v-edges");

            // The K_n game, with the blue K_n edge as the base's opener.
            const int kn_blue = tag_ == 'D' ? missing_ : blue1_;
            auto vspec = star_subspec(n_);
            Move opener = base_->choose(Position::initial(*vspec));
            auto [oa, ob] = vspec->host.endpoints(opener.edge);
            auto [ra, rb] = host.endpoints(kn_blue);
            vb_ = VirtualBoard::make(
                vspec,
                seeded_mapping(
                    vertices_except(host.vertex_count(), {v1_, v2_}),
                    {oa, ob}, {ra, rb}),
                PlayerId::P1, host);
            base_->notify(vb_.virtual_position(), opener);
            vb_.apply_virtual(opener.edge);
            phase_ = 4;
            return;
        }
        case 4: {
            if (own) {
                // A skip or extra may land on a pair edge; widow that pair.
                if (auto it = partner_.find(m.edge); it != partner_.end()) {
                    partner_.erase(it->second);
                    partner_.erase(m.edge);
                }
                if (pair_reply_pending_ >= 0) {
                    pair_reply_pending_ = -1;
                    vb_.extras.set(m.edge);
                } else if (vb_.self_to_move()) {
                    executor_apply_self(vb_, *base_, *spec_, m);
                } else {
                    vb_.extras.set(m.edge);
                }
                return;
            }
            if (auto it = partner_.find(m.edge); it != partner_.end()) {
                pair_reply_pending_ = it->second;
                partner_.erase(it->second);
                partner_.erase(m.edge);
                return;
            }
            if (vb_.real_to_virtual_edge(host, m.edge)) {
                executor_apply_opponent(vb_, *base_, *spec_, m);
                return;
            }
            // A widowed pair element; our reply is a plain skip.
            return;
        }
        default:
            throw StrategyFault("star-lift+2 notify out of phase");
    }
}

}  // namespace egl
