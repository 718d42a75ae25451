#include "egl/beck.hpp"

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

namespace egl {

using boost::multiprecision::cpp_int;

double ramsey_floor(double n) {
    if (n < 2) throw std::domain_error("ramsey_floor needs n >= 2");
    return std::log(n) / std::log(RamseyConstants::kRamseyFloorBase);
}

namespace {

cpp_int binomial(long long n, int k) {
    if (k < 0 || k > n) return 0;
    cpp_int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

cpp_int ipow(cpp_int base, long long e) {
    cpp_int r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace

BeckCondition beck_condition(long long n, int k, int p, int q) {
    if (k < 2 || p < 1 || q < 1)
        throw std::domain_error("beck_condition needs k >= 2, p,q >= 1");
    BeckCondition out;
    cpp_int choose = binomial(n, k);
    const long long k2 = static_cast<long long>(k) * (k - 1) / 2;

    if (choose == 0) {
        out.vacuous = true;
        out.holds = true;
        out.value = 0.0L;
        return out;
    }

    // C(n,k)^p < (q+1)^(k2 - p), rearranged to keep both exponents positive.
    cpp_int lhs = ipow(choose, p);
    cpp_int rhs = 1;
    if (k2 >= p) rhs = ipow(q + 1, k2 - p);
    else lhs *= ipow(q + 1, p - k2);
    out.holds = lhs < rhs;

    // The left-hand value itself, exact when it is a small integer ratio.
    if (k2 % p == 0 && k2 / p <= 4096) {
        cpp_int denom = ipow(q + 1, k2 / p);
        if (choose < cpp_int(1) << 53 && denom < cpp_int(1) << 53) {
            out.value = static_cast<long double>(choose.convert_to<double>()) /
                        static_cast<long double>(denom.convert_to<double>());
            return out;
        }
    }
    out.exact = false;
    long double log2v = 0.0L;
    for (int i = 1; i <= k; ++i)
        log2v += std::log2(static_cast<long double>(n - k + i)) -
                 std::log2(static_cast<long double>(i));
    log2v -= static_cast<long double>(k2) / p * std::log2((long double)(q + 1));
    out.value = std::exp2(log2v);
    return out;
}

BiasThreshold bias_threshold_k(double n, int p, int q) {
    if (n < 2 || p < 1 || q < 1)
        throw std::domain_error("bias_threshold_k needs n >= 2, p,q >= 1");
    const double x = 2.0 * p * std::log(n) / std::log(q + 1.0);
    // Exact-integer logs must not get rounded one step up by float fuzz.
    const double c = std::abs(x - std::round(x)) < 1e-9 ? std::round(x)
                                                        : std::ceil(x);
    BiasThreshold out;
    out.k = 1 + static_cast<int>(c);
    out.large_enough = out.k >= q + 2;
    return out;
}

bool bias_hypothesis_holds(int p, int q) {
    return q + 1 > std::pow(RamseyConstants::kRamseyFloorBase, 2.0 * p);
}

namespace {

std::vector<VertexSet> host_cliques_of_size(const HostGraph& host, int k) {
    std::vector<VertexSet> out;
    const int n = host.vertex_count();
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == k) {
            VertexSet s = 0;
            for (int v : pick) s |= VertexSet{1} << v;
            out.push_back(s);
            return;
        }
        for (int v = from; v < n; ++v) {
            bool ok = true;
            for (int u : pick)
                if (!host.has_edge(u, v)) ok = false;
            if (!ok) continue;
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

long double subset_weight(const HostGraph& host, VertexSet s,
                          const EdgeSet& maker, const EdgeSet& breaker,
                          int p, int q, bool& alive) {
    int unclaimed = 0;
    alive = true;
    for (int i = 0; i < host.vertex_count(); ++i) {
        if (!(s >> i & 1)) continue;
        for (int j = i + 1; j < host.vertex_count(); ++j) {
            if (!(s >> j & 1)) continue;
            int e = host.edge_index(i, j);
            if (breaker.test(e)) {
                alive = false;
                return 0.0L;
            }
            if (!maker.test(e)) ++unclaimed;
        }
    }
    return std::exp2(-static_cast<long double>(unclaimed) / p *
                     std::log2((long double)(q + 1)));
}

}  // namespace

long double beck_potential(const GameSpec& spec, int k, const EdgeSet& maker,
                           const EdgeSet& breaker) {
    long double phi = 0.0L;
    for (VertexSet s : host_cliques_of_size(spec.host, k)) {
        bool alive;
        long double w =
            subset_weight(spec.host, s, maker, breaker, spec.p, spec.q, alive);
        if (alive) phi += w;
    }
    return phi;
}

BeckBreakerStrategy::BeckBreakerStrategy(std::shared_ptr<const GameSpec> spec,
                                         int k)
    : spec_(std::move(spec)), k_(k) {
    if (spec_->kind != GameKind::Clique)
        throw std::domain_error("the breaker strategy targets clique games");
    BeckCondition cond =
        beck_condition(spec_->host.vertex_count(), k_, spec_->p, spec_->q);
    if (!spec_->host.is_complete())
        throw std::domain_error("the breaker strategy needs a complete host");
    if (!cond.holds)
        throw std::domain_error(
            "criterion fails at the initial board: value " +
            std::to_string(static_cast<double>(cond.value)) + " is not below " +
            std::to_string(1.0 / (spec_->q + 1)));
    subsets_ = host_cliques_of_size(spec_->host, k_);
}

Move BeckBreakerStrategy::choose(const Position& pos) const {
    const HostGraph& host = spec_->host;
    const EdgeSet& maker = pos.claimed1();
    const EdgeSet& breaker = pos.claimed2();
    EdgeSet free = pos.unclaimed();

    long double best_drop = -1.0L;
    int best_edge = -1;
    for (int e = free.lowest(); e >= 0; e = free.next_after(e)) {
        auto [a, b] = host.endpoints(e);
        long double drop = 0.0L;
        for (VertexSet s : subsets_) {
            if (!(s >> a & 1) || !(s >> b & 1)) continue;
            bool alive;
            long double w = subset_weight(host, s, maker, breaker, spec_->p,
                                          spec_->q, alive);
            if (alive) drop += w;
        }
        if (drop > best_drop) {
            best_drop = drop;
            best_edge = e;
        }
    }
    if (best_edge < 0) throw StrategyFault("no move available");
    return Move{best_edge};
}

}  // namespace egl
