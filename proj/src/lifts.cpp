#include "egl/lifts.hpp"

#include <algorithm>
#include <bit>

namespace egl {

namespace {

std::shared_ptr<const GameSpec> clique_subspec(int n) {
    return std::make_shared<const GameSpec>(GameKind::Clique,
                                            HostGraph::complete(n));
}

std::vector<int> vertices_except(int n, std::initializer_list<int> excl) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (std::find(excl.begin(), excl.end(), v) == excl.end())
            out.push_back(v);
    return out;
}

// Mapping that sends the inner strategy's opener onto a designated real edge
// and the remaining virtual vertices onto the remaining ones in sorted order.
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

int lowest_incident_unclaimed(const Position& pos, int edge) {
    auto [a, b] = pos.spec().host.endpoints(edge);
    EdgeSet near = (pos.spec().host.incident(a) | pos.spec().host.incident(b));
    near &= pos.unclaimed();
    int e = near.lowest();
    if (e < 0) throw StrategyFault("no unclaimed incident edge");
    return e;
}

void require_complete_host(const GameSpec& spec, int expected_n,
                           const char* who) {
    if (!spec.host.is_complete() || spec.host.vertex_count() != expected_n ||
        spec.kind != GameKind::Clique || spec.p != 1 || spec.q != 1)
        throw std::domain_error(std::string(who) +
                                ": spec must be the unbiased clique game on "
                                "the complete host of matching order");
}

}  // namespace

SecondState classify_second_state(const Position& pos) {
    const HostGraph& host = pos.spec().host;
    if (pos.claimed1().count() != 2 || pos.claimed2().count() != 1)
        throw std::domain_error(
            "classification needs exactly two red edges and one blue edge");

    auto reds = pos.claimed1().to_vector();
    auto [p1, q1] = host.endpoints(reds[0]);
    auto [p2, q2] = host.endpoints(reds[1]);
    auto [x, y] = host.endpoints(pos.claimed2().lowest());

    SecondState st;
    st.x = x;
    st.y = y;

    int c = -1;  // shared red vertex
    if (p1 == p2 || p1 == q2) c = p1;
    else if (q1 == p2 || q1 == q2) c = q1;

    if (c >= 0) {
        const int l1 = std::min(p1 == c ? q1 : p1, p2 == c ? q2 : p2);
        const int l2 = std::max(p1 == c ? q1 : p1, p2 == c ? q2 : p2);
        if ((x == l1 && y == l2) || (x == l2 && y == l1)) {
            st.tag = 'B';
        } else if (x == c || y == c) {
            st.tag = 'D';
        } else if (x == l1 || x == l2 || y == l1 || y == l2) {
            st.tag = 'A';
        } else {
            throw std::domain_error("blue edge not incident to a red edge");
        }
        if (st.tag == 'D') {
            st.v1 = l1;
            st.v2 = l2;
        } else {
            st.v1 = c;
            st.v2 = -1;  // isolated vertex, found below
        }
    } else {
        auto partner = [&](int v) -> int {
            if (v == p1) return q1;
            if (v == q1) return p1;
            if (v == p2) return q2;
            if (v == q2) return p2;
            return -1;
        };
        const int px = partner(x), py = partner(y);
        if (px >= 0 && py >= 0) {
            st.tag = 'C';
            st.v1 = px;
            st.v2 = py;
        } else if (px >= 0 || py >= 0) {
            st.tag = 'E';
            const int t = px >= 0 ? x : y;
            st.v1 = partner(t);
            // the red edge disjoint from the blue one
            const bool first_disjoint = (st.v1 == p2 || st.v1 == q2 ||
                                         t == p2 || t == q2);
            auto [d1, d2] = first_disjoint ? std::pair{p1, q1}
                                           : std::pair{p2, q2};
            st.v2 = std::min(d1, d2);
        } else {
            throw std::domain_error("blue edge not incident to a red edge");
        }
    }

    EdgeSet claimed = pos.claimed1() | pos.claimed2();
    if (st.v2 < 0) {
        for (int v = 0; v < host.vertex_count(); ++v) {
            if (!claimed.intersects(host.incident(v))) {
                st.v2 = v;
                break;
            }
        }
        if (st.v2 < 0)
            throw std::domain_error("no isolated vertex available for v2");
    }

    // z: not in a red edge with x or y, and on every red edge avoiding both.
    for (int v = 0; v < host.vertex_count() && st.z < 0; ++v) {
        if (v == x || v == y) continue;
        bool ok = true;
        for (int r : reds) {
            auto [a, b] = host.endpoints(r);
            const bool has_xy = (a == x || b == x || a == y || b == y);
            const bool has_v = (a == v || b == v);
            if (has_xy && has_v) ok = false;    // red edge joining v to x/y
            if (!has_xy && !has_v) ok = false;  // avoiding edge missing v
        }
        if (ok) st.z = v;
    }
    if (st.z < 0) throw std::domain_error("no valid z vertex available");
    return st;
}

// ---------------------------------------------------------------------------
// CliqueLiftPlus1

CliqueLiftPlus1::CliqueLiftPlus1(std::shared_ptr<const GameSpec> spec, int n,
                                 std::unique_ptr<Strategy> base)
    : spec_(std::move(spec)), n_(n), base_(std::move(base)) {
    if (n_ < 2) throw std::domain_error("clique-lift+1 needs n >= 2");
    require_complete_host(*spec_, n_ + 1, "clique-lift+1");
}

CliqueLiftPlus1::CliqueLiftPlus1(const CliqueLiftPlus1& o)
    : spec_(o.spec_),
      n_(o.n_),
      base_(o.base_ ? o.base_->clone() : nullptr),
      v_(o.v_),
      exec_(o.exec_ ? std::make_unique<VirtualExecutorStrategy>(*o.exec_)
                    : nullptr) {}

Move CliqueLiftPlus1::choose(const Position& pos) const {
    if (!exec_) throw StrategyFault("clique-lift+1 moves second");
    return exec_->choose(pos);
}

void CliqueLiftPlus1::notify(const Position& before, Move m) {
    if (!exec_) {
        // Opponent's opening edge uv: give away the whole star at v and run
        // the base strategy as first player on the remaining K_n.
        auto [a, b] = spec_->host.endpoints(m.edge);
        (void)a;
        v_ = b;
        exec_ = std::make_unique<VirtualExecutorStrategy>(
            spec_, PlayerId::P2, clique_subspec(n_),
            vertices_except(spec_->host.vertex_count(), {v_}), PlayerId::P1,
            std::move(base_));
        EdgeSet gift = spec_->host.incident(v_);
        gift.reset(m.edge);  // uv itself is genuinely claimed
        exec_->gift(gift);
        return;
    }
    exec_->notify(before, m);
}

// ---------------------------------------------------------------------------
// CliqueLiftPlus2

CliqueLiftPlus2::CliqueLiftPlus2(std::shared_ptr<const GameSpec> spec, int n,
                                 std::unique_ptr<Strategy> base)
    : spec_(std::move(spec)), n_(n), base_(std::move(base)) {
    if (n_ < 3) throw std::domain_error("clique-lift+2 needs n >= 3");
    require_complete_host(*spec_, n_ + 2, "clique-lift+2");
}

CliqueLiftPlus2::CliqueLiftPlus2(const CliqueLiftPlus2& o)
    : spec_(o.spec_),
      n_(o.n_),
      base_(o.base_ ? o.base_->clone() : nullptr),
      phase_(o.phase_),
      red1_(o.red1_),
      blue1_(o.blue1_),
      state_(o.state_),
      snapshot_(o.snapshot_),
      exec_(o.exec_ ? std::make_unique<VirtualExecutorStrategy>(*o.exec_)
                    : nullptr) {}

Move CliqueLiftPlus2::choose(const Position& pos) const {
    switch (phase_) {
        case 1:
            return Move{lowest_incident_unclaimed(pos, red1_)};
        case 3:
            return Move{
                pos.spec().host.edge_index(state_->v1, state_->v2)};
        case 4:
            return exec_->choose(pos);
        default:
            throw StrategyFault("clique-lift+2 asked to move out of turn");
    }
}

void CliqueLiftPlus2::notify(const Position& before, Move m) {
    switch (phase_) {
        case 0:
            red1_ = m.edge;
            phase_ = 1;
            return;
        case 1:
            blue1_ = m.edge;
            phase_ = 2;
            return;
        case 2: {
            state_ = classify_second_state(before.apply(m));
            phase_ = 3;
            return;
        }
        case 3: {
            const HostGraph& host = spec_->host;
            Position after = before.apply(m);

            // Virtual K_n game in which our incident edge was the opener.
            auto sub = vertices_except(host.vertex_count(),
                                       {state_->v1, state_->v2});
            auto vspec = clique_subspec(n_);
            Move opener =
                base_->choose(Position::initial(*vspec));  // consult only
            auto [oa, ob] = vspec->host.endpoints(opener.edge);
            auto [ra, rb] = host.endpoints(blue1_);
            exec_ = std::make_unique<VirtualExecutorStrategy>(
                spec_, PlayerId::P2, vspec,
                seeded_mapping(sub, {oa, ob}, {ra, rb}), PlayerId::P1,
                std::move(base_));
            exec_->seed_self_move(opener.edge);

            // Gift every missing red edge from v1 and v2 into the K_n.
            EdgeSet gift;
            for (int v : {state_->v1, state_->v2}) {
                for (int w : sub) {
                    int e = host.edge_index(v, w);
                    if (after.claimed2().test(e))
                        throw StrategyFault("S1 gift edge is already blue");
                    if (!after.claimed1().test(e)) gift.set(e);
                }
            }
            exec_->gift(gift);

            snapshot_.red = after.claimed1() | gift;
            snapshot_.blue = after.claimed2();
            snapshot_.taken = true;
            phase_ = 4;
            return;
        }
        case 4:
            exec_->notify(before, m);
            return;
        default:
            throw StrategyFault("clique-lift+2 notify out of phase");
    }
}

// ---------------------------------------------------------------------------
// CliqueLiftPlus3

CliqueLiftPlus3::CliqueLiftPlus3(std::shared_ptr<const GameSpec> spec, int n,
                                 std::unique_ptr<Strategy> base)
    : spec_(std::move(spec)), n_(n), base_(std::move(base)) {
    if (n_ < 3) throw std::domain_error("clique-lift+3 needs n >= 3");
    require_complete_host(*spec_, n_ + 3, "clique-lift+3");
}

CliqueLiftPlus3::CliqueLiftPlus3(const CliqueLiftPlus3& o)
    : spec_(o.spec_),
      n_(o.n_),
      base_(o.base_ ? o.base_->clone() : nullptr),
      phase_(o.phase_),
      red1_(o.red1_),
      x_(o.x_), y_(o.y_), z_(o.z_),
      u_(o.u_), v1_(o.v1_), v2_(o.v2_),
      shared_(o.shared_),
      early_response_(o.early_response_),
      pending_response_(o.pending_response_),
      pending_mirror_(o.pending_mirror_),
      tracker_(o.tracker_),
      snapshot_(o.snapshot_),
      vb_(o.vb_) {}

bool CliqueLiftPlus3::guarantee_covered() const { return n_ >= 46; }

void CliqueLiftPlus3::designate_frame(const Position& after_red2) {
    SecondState st = classify_second_state(after_red2);
    x_ = st.x;
    y_ = st.y;
    z_ = st.z;
    vb_ = VirtualBoard::make(
        clique_subspec(n_),
        vertices_except(spec_->host.vertex_count(), {x_, y_, z_}),
        PlayerId::P1, spec_->host);
}

void CliqueLiftPlus3::relabel_and_gift(const EdgeSet& red_now,
                                       const EdgeSet& blue_now) {
    const HostGraph& host = spec_->host;
    const int bx = (blue_now & host.incident(x_)).count();
    u_ = bx == 2 ? x_ : y_;
    v1_ = std::min(u_ == x_ ? y_ : x_, z_);
    v2_ = std::max(u_ == x_ ? y_ : x_, z_);

    // Shared red neighbors in H: existing ones topped up to exactly three.
    shared_ = 0;
    for (int v : {v1_, v2_}) {
        EdgeSet vr = red_now & host.incident(v);
        for (int e = vr.lowest(); e >= 0; e = vr.next_after(e)) {
            auto [a, b] = host.endpoints(e);
            int w = a == v ? b : a;
            if (w != x_ && w != y_ && w != z_) shared_ |= VertexSet{1} << w;
        }
    }
    if (std::popcount(shared_) > 3)
        throw StrategyFault("more than three red edges at v1/v2");
    for (int w = 0; w < host.vertex_count() && std::popcount(shared_) < 3;
         ++w) {
        if (w == x_ || w == y_ || w == z_) continue;
        shared_ |= VertexSet{1} << w;
    }

    EdgeSet gift;
    auto add_red = [&](int a, int b) {
        int e = host.edge_index(a, b);
        if (blue_now.test(e)) throw StrategyFault("S2 gift edge already blue");
        if (!red_now.test(e)) gift.set(e);
    };
    for (int h = 0; h < host.vertex_count(); ++h) {
        if (h == x_ || h == y_ || h == z_) continue;
        add_red(u_, h);
        if (shared_ >> h & 1) {
            add_red(v1_, h);
            add_red(v2_, h);
        }
    }
    add_red(v1_, v2_);
    vb_.gift(host, gift);

    snapshot_.red = red_now | gift;
    snapshot_.blue = blue_now;
    snapshot_.taken = true;
}

Move CliqueLiftPlus3::choose(const Position& pos) const {
    const HostGraph& host = spec_->host;
    switch (phase_) {
        case 1:
            return Move{lowest_incident_unclaimed(pos, red1_)};
        case 3: {
            if (vb_.self_to_move())
                return executor_choose(vb_, *base_, *spec_, pos);
            // Waiting skip; claiming xz (or yz) now keeps the later gift
            // exact, since the response move would claim it anyway.
            for (int e : {host.edge_index(x_, z_), host.edge_index(y_, z_)})
                if (pos.unclaimed().test(e)) return Move{e};
            return lowest_legal(pos);
        }
        case 4:
            return Move{pending_response_};
        case 5: {
            if (pending_mirror_ >= 0) {
                if (pos.unclaimed().test(pending_mirror_))
                    return Move{pending_mirror_};
                if (pos.claimed2().test(pending_mirror_))
                    return lowest_legal(pos);  // mirrored by an earlier extra
                throw StrategyFault("mirror target claimed by the opponent");
            }
            if (vb_.self_to_move())
                return executor_choose(vb_, *base_, *spec_, pos);
            return lowest_legal(pos);
        }
        default:
            throw StrategyFault("clique-lift+3 asked to move out of turn");
    }
}

void CliqueLiftPlus3::notify(const Position& before, Move m) {
    const HostGraph& host = spec_->host;
    const bool own = before.turn().mover == PlayerId::P2;
    switch (phase_) {
        case 0:
            red1_ = m.edge;
            phase_ = 1;
            return;
        case 1: {
            auto [a, b] = host.endpoints(m.edge);
            x_ = a;
            y_ = b;
            phase_ = 2;
            return;
        }
        case 2:
            designate_frame(before.apply(m));
            phase_ = 3;
            return;
        case 3: {
            if (own) {
                if (vb_.self_to_move()) {
                    executor_apply_self(vb_, *base_, *spec_, m);
                } else {
                    vb_.extras.set(m.edge);
                    if (m.edge == host.edge_index(x_, z_) ||
                        m.edge == host.edge_index(y_, z_))
                        early_response_ = m.edge;
                }
                return;
            }
            auto [a, b] = host.endpoints(m.edge);
            auto in_frame = [&](int v) { return v == x_ || v == y_ || v == z_; };
            if (!in_frame(a) && !in_frame(b)) {
                executor_apply_opponent(vb_, *base_, *spec_, m);
                return;
            }
            // First touch of {x,y,z}: snapshot the sub-board, then respond.
            tracker_.sub_red = vb_.map_claims_to_real(
                host, other(vb_.self_virtual));
            tracker_.sub_blue = vb_.map_claims_to_real(host, vb_.self_virtual);
            tracker_.our_moves = vb_.vclaim(vb_.self_virtual).count();
            tracker_.their_moves = vb_.vclaim(other(vb_.self_virtual)).count();
            tracker_.complete = vb_.vcomplete();
            if (!tracker_.good())
                throw StrategyFault("sub-board state is not good at touch");

            Position after = before.apply(m);
            if (early_response_ >= 0) {
                relabel_and_gift(after.claimed1(), after.claimed2());
                phase_ = 5;
                return;
            }
            const int exz = host.edge_index(x_, z_);
            const int eyz = host.edge_index(y_, z_);
            if (m.edge == exz) {
                pending_response_ = eyz;
            } else if (m.edge == eyz) {
                pending_response_ = exz;
            } else {
                // Both available: label u so that the fewest existing red
                // edges run from the remaining {v1, v2} into H.
                auto v_reds = [&](int va, int vbx) {
                    EdgeSet r = after.claimed1() &
                                (host.incident(va) | host.incident(vbx));
                    int cnt = 0;
                    for (int e = r.lowest(); e >= 0; e = r.next_after(e)) {
                        auto [p, q] = host.endpoints(e);
                        auto in3 = [&](int v) {
                            return v == x_ || v == y_ || v == z_;
                        };
                        if (!(in3(p) && in3(q))) ++cnt;
                    }
                    return cnt;
                };
                pending_response_ =
                    v_reds(y_, z_) <= v_reds(x_, z_) ? exz : eyz;
            }
            phase_ = 4;
            return;
        }
        case 4: {
            if (!own || m.edge != pending_response_)
                throw StrategyFault("expected the x/y-z response move");
            vb_.extras.set(m.edge);
            pending_response_ = -1;
            relabel_and_gift(before.claimed1(), before.apply(m).claimed2());
            phase_ = 5;
            return;
        }
        case 5: {
            if (own) {
                if (pending_mirror_ >= 0) {
                    pending_mirror_ = -1;
                    vb_.extras.set(m.edge);
                } else if (vb_.self_to_move()) {
                    executor_apply_self(vb_, *base_, *spec_, m);
                } else {
                    vb_.extras.set(m.edge);
                }
                return;
            }
            if (vb_.gifted.test(m.edge)) return;  // accounted
            if (vb_.real_to_virtual_edge(host, m.edge)) {
                executor_apply_opponent(vb_, *base_, *spec_, m);
                return;
            }
            auto [a, b] = host.endpoints(m.edge);
            int w = -1, vi = -1;
            if (a == v1_ || a == v2_) vi = a, w = b;
            else if (b == v1_ || b == v2_) vi = b, w = a;
            if (vi < 0 || w == x_ || w == y_ || w == z_)
                throw StrategyFault("unexpected opponent move after the gift");
            pending_mirror_ = host.edge_index(vi == v1_ ? v2_ : v1_, w);
            return;
        }
        default:
            throw StrategyFault("clique-lift+3 notify out of phase");
    }
}

}  // namespace egl
