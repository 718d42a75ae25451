#include "egl/virtual_board.hpp"

#include <algorithm>

namespace egl {

VirtualBoard VirtualBoard::make(std::shared_ptr<const GameSpec> vspec,
                                std::vector<int> v2r, PlayerId self_virtual,
                                const HostGraph& real_host) {
    VirtualBoard vb;
    vb.vspec = std::move(vspec);
    if (static_cast<int>(v2r.size()) != vb.vspec->host.vertex_count())
        throw std::logic_error("virtual-real vertex map has wrong size");
    vb.v2r = std::move(v2r);
    vb.r2v.assign(real_host.vertex_count(), -1);
    for (int v = 0; v < static_cast<int>(vb.v2r.size()); ++v) {
        int r = vb.v2r[v];
        if (r < 0 || r >= real_host.vertex_count() || vb.r2v[r] != -1)
            throw std::logic_error("virtual-real vertex map not injective");
        vb.r2v[r] = v;
    }
    // Every virtual edge must embed as a real edge.
    for (int e = 0; e < vb.vspec->host.edge_count(); ++e) {
        auto [i, j] = vb.vspec->host.endpoints(e);
        if (!real_host.has_edge(vb.v2r[i], vb.v2r[j]))
            throw std::logic_error("virtual edge has no real image");
    }
    vb.self_virtual = self_virtual;
    return vb;
}

std::optional<int> VirtualBoard::real_to_virtual_edge(
    const HostGraph& real_host, int real_edge) const {
    auto [i, j] = real_host.endpoints(real_edge);
    int vi = r2v[i], vj = r2v[j];
    if (vi < 0 || vj < 0 || !vspec->host.has_edge(vi, vj))
        return std::nullopt;
    return vspec->host.edge_index(vi, vj);
}

int VirtualBoard::virtual_to_real_edge(const HostGraph& real_host,
                                       int vedge) const {
    auto [i, j] = vspec->host.endpoints(vedge);
    return real_host.edge_index(v2r[i], v2r[j]);
}

Position VirtualBoard::virtual_position() const {
    try {
        return Position(*vspec, vclaim1, vclaim2);
    } catch (const std::exception& e) {
        throw StrategyFault(std::string("virtual board off schedule: ") +
                            e.what());
    }
}

void VirtualBoard::apply_virtual(int vedge) {
    if (vclaim1.test(vedge) || vclaim2.test(vedge))
        throw StrategyFault("virtual move on a claimed virtual edge");
    (vturn == PlayerId::P1 ? vclaim1 : vclaim2).set(vedge);
    vturn = other(vturn);
}

void VirtualBoard::gift(const HostGraph& real_host, const EdgeSet& real_edges) {
    gifted |= real_edges;
    EdgeSet& opp = self_virtual == PlayerId::P1 ? vclaim2 : vclaim1;
    for (int e = real_edges.lowest(); e >= 0; e = real_edges.next_after(e)) {
        if (auto ve = real_to_virtual_edge(real_host, e)) {
            if (vclaim(self_virtual).test(*ve))
                throw StrategyFault("gifted edge already self-claimed");
            opp.set(*ve);
        }
    }
}

VirtualExecutorStrategy::VirtualExecutorStrategy(
    std::shared_ptr<const GameSpec> real_spec, PlayerId real_self,
    std::shared_ptr<const GameSpec> vspec, std::vector<int> v2r,
    PlayerId self_virtual, std::unique_ptr<Strategy> inner)
    : real_spec_(std::move(real_spec)),
      real_self_(real_self),
      vb_(VirtualBoard::make(std::move(vspec), std::move(v2r), self_virtual,
                             real_spec_->host)),
      inner_(std::move(inner)) {}

VirtualExecutorStrategy::VirtualExecutorStrategy(
    const VirtualExecutorStrategy& o)
    : real_spec_(o.real_spec_),
      real_self_(o.real_self_),
      vb_(o.vb_),
      inner_(o.inner_->clone()) {}

void VirtualExecutorStrategy::seed_self_move(int vedge) {
    if (!vb_.self_to_move())
        throw StrategyFault("seed move out of virtual turn");
    Position before = vb_.virtual_position();
    inner_->notify(before, Move{vedge});
    vb_.apply_virtual(vedge);
}

Move executor_choose(const VirtualBoard& vb, const Strategy& inner,
                     const GameSpec& real_spec, const Position& pos) {
    if (vb.self_to_move()) {
        Move vm = inner.choose(vb.virtual_position());
        int real = vb.virtual_to_real_edge(real_spec.host, vm.edge);
        if (vb.extras.test(real)) return lowest_legal(pos);  // rule (b)
        if (pos.unclaimed().test(real)) return Move{real};   // rule (a)
        throw StrategyFault("inner strategy picked an unavailable edge");
    }
    return lowest_legal(pos);  // skip turn, rule (b)
}

void executor_apply_self(VirtualBoard& vb, Strategy& inner,
                         const GameSpec& real_spec, Move m) {
    if (!vb.self_to_move()) {
        vb.extras.set(m.edge);  // skip filler
        return;
    }
    Position vbefore = vb.virtual_position();
    Move vm = inner.choose(vbefore);
    int real = vb.virtual_to_real_edge(real_spec.host, vm.edge);
    if (m.edge == real) {
        inner.notify(vbefore, vm);
        vb.apply_virtual(vm.edge);
    } else if (vb.extras.test(real)) {
        // Virtual move already on our side of the real board; the real
        // claim goes into the extras.
        inner.notify(vbefore, vm);
        vb.apply_virtual(vm.edge);
        vb.extras.set(m.edge);
    } else {
        throw StrategyFault("executor applied a move it did not choose");
    }
}

void executor_apply_opponent(VirtualBoard& vb, Strategy& inner,
                             const GameSpec& real_spec, Move m) {
    if (vb.gifted.test(m.edge)) return;  // rule (c): already accounted
    auto ve = vb.real_to_virtual_edge(real_spec.host, m.edge);
    if (!ve) return;  // outside the virtual board
    if (vb.vclaim(other(vb.self_virtual)).test(*ve)) return;  // accounted
    if (vb.vclaim(vb.self_virtual).test(*ve))
        throw StrategyFault("opponent claimed an edge we hold virtually");
    if (vb.vturn != other(vb.self_virtual))
        throw StrategyFault("virtual game out of sync with real opponent");
    Position vbefore = vb.virtual_position();
    inner.notify(vbefore, Move{*ve});
    vb.apply_virtual(*ve);
}

Move VirtualExecutorStrategy::choose(const Position& pos) const {
    return executor_choose(vb_, *inner_, *real_spec_, pos);
}

void VirtualExecutorStrategy::notify(const Position& before, Move m) {
    if (before.turn().mover == real_self_)
        executor_apply_self(vb_, *inner_, *real_spec_, m);
    else
        executor_apply_opponent(vb_, *inner_, *real_spec_, m);
}

std::unique_ptr<VirtualExecutorStrategy> virtual_executor(
    std::shared_ptr<const GameSpec> real_spec, PlayerId real_self,
    std::shared_ptr<const GameSpec> vspec, std::vector<int> v2r,
    PlayerId self_virtual, std::unique_ptr<Strategy> inner) {
    return std::make_unique<VirtualExecutorStrategy>(
        std::move(real_spec), real_self, std::move(vspec), std::move(v2r),
        self_virtual, std::move(inner));
}

std::unique_ptr<VirtualExecutorStrategy> steal_transform(
    std::shared_ptr<const GameSpec> spec, std::unique_ptr<Strategy> s2) {
    std::vector<int> identity(spec->host.vertex_count());
    for (std::size_t v = 0; v < identity.size(); ++v)
        identity[v] = static_cast<int>(v);
    auto vspec = spec;
    return std::make_unique<VirtualExecutorStrategy>(
        spec, PlayerId::P1, std::move(vspec), std::move(identity),
        PlayerId::P2, std::move(s2));
}

}  // namespace egl
