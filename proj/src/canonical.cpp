#include "egl/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace egl {

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

CanonicalCode CanonicalCode::from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0)
        throw std::runtime_error("canonical code hex has odd length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw std::runtime_error("canonical code hex has bad digit");
    };
    CanonicalCode code;
    code.bytes.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2)
        code.bytes.push_back(
            static_cast<char>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
    return code;
}

int map_edge(const HostGraph& host, const std::vector<int>& perm, int edge) {
    auto [i, j] = host.endpoints(edge);
    return host.edge_index(perm[i], perm[j]);
}

EdgeSet map_edge_set(const HostGraph& host, const std::vector<int>& perm,
                     const EdgeSet& edges) {
    EdgeSet out;
    for (int e = edges.lowest(); e >= 0; e = edges.next_after(e))
        out.set(map_edge(host, perm, e));
    return out;
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t v = 0; v < perm.size(); ++v)
        inv[static_cast<std::size_t>(perm[v])] = static_cast<int>(v);
    return inv;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

// Iterative color refinement on (host-degree, red-degree, blue-degree)
// signatures; neighbor multisets are folded in per relation. Hash collisions
// can only coarsen the partition, which costs search time, never soundness.
std::vector<std::uint64_t> refine(const HostGraph& host, const EdgeSet& red,
                                  const EdgeSet& blue) {
    const int n = host.vertex_count();
    std::vector<std::vector<int>> nbr_red(n), nbr_blue(n), nbr_free(n);
    for (int e = 0; e < host.edge_count(); ++e) {
        auto [i, j] = host.endpoints(e);
        auto& rel = red.test(e) ? nbr_red : blue.test(e) ? nbr_blue : nbr_free;
        rel[i].push_back(j);
        rel[j].push_back(i);
    }

    std::vector<std::uint64_t> sig(n);
    for (int v = 0; v < n; ++v)
        sig[v] = mix(mix(mix(0xabcd, nbr_red[v].size() + nbr_blue[v].size() +
                                         nbr_free[v].size()),
                         nbr_red[v].size()),
                     nbr_blue[v].size());

    auto distinct = [](std::vector<std::uint64_t> s) {
        std::sort(s.begin(), s.end());
        return std::unique(s.begin(), s.end()) - s.begin();
    };

    std::vector<std::uint64_t> next(n);
    long prev_classes = distinct(sig);
    for (int round = 0; round < n; ++round) {
        for (int v = 0; v < n; ++v) {
            std::uint64_t h = mix(0x517cc1b7, sig[v]);
            for (auto* nbrs : {&nbr_red, &nbr_blue, &nbr_free}) {
                std::vector<std::uint64_t> ms;
                ms.reserve((*nbrs)[v].size());
                for (int u : (*nbrs)[v]) ms.push_back(sig[u]);
                std::sort(ms.begin(), ms.end());
                h = mix(h, 0x2545f491);
                for (auto x : ms) h = mix(h, x);
            }
            next[v] = h;
        }
        sig = next;
        long classes = distinct(sig);
        if (classes == prev_classes) break;
        prev_classes = classes;
    }
    return sig;
}

struct Minimizer {
    const HostGraph& host;
    const EdgeSet& red;
    const EdgeSet& blue;
    bool complete_host;

    std::vector<int> order;                       // vertices to assign
    std::vector<std::vector<int>> candidates;     // labels per order entry
    std::vector<int> sigma;                       // vertex -> label, -1 unset
    std::vector<char> used;                       // label taken
    std::string best;                             // best red+blue encoding
    std::vector<int> best_sigma;
    bool have_best = false;

    std::string encode() const {
        const int nbytes = (host.edge_count() + 7) / 8;
        std::string out(static_cast<std::size_t>(2 * nbytes), '\0');
        for (int e = red.lowest(); e >= 0; e = red.next_after(e)) {
            int id = map_edge(host, sigma, e);
            out[id >> 3] |= static_cast<char>(1 << (id & 7));
        }
        for (int e = blue.lowest(); e >= 0; e = blue.next_after(e)) {
            int id = map_edge(host, sigma, e);
            out[nbytes + (id >> 3)] |= static_cast<char>(1 << (id & 7));
        }
        return out;
    }

    bool consistent(int v, int label) const {
        if (complete_host) return true;
        for (int u = 0; u < host.vertex_count(); ++u) {
            if (sigma[u] < 0 || u == v) continue;
            if (host.has_edge(v, u) != host.has_edge(label, sigma[u]))
                return false;
        }
        return true;
    }

    void search(std::size_t idx) {
        if (idx == order.size()) {
            std::string enc = encode();
            if (!have_best || enc < best) {
                best = std::move(enc);
                best_sigma = sigma;
                have_best = true;
            }
            return;
        }
        const int v = order[idx];
        for (int label : candidates[idx]) {
            if (used[label] || !consistent(v, label)) continue;
            used[label] = 1;
            sigma[v] = label;
            search(idx + 1);
            sigma[v] = -1;
            used[label] = 0;
        }
    }
};

CanonicalForm canonicalize(const HostGraph& host, const EdgeSet& red,
                           const EdgeSet& blue) {
    const int n = host.vertex_count();
    auto sig = refine(host, red, blue);

    // Group vertices into classes ordered by signature; each class owns a
    // contiguous block of canonical labels.
    std::map<std::uint64_t, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[sig[v]].push_back(v);

    EdgeSet claimed = red | blue;
    auto is_support = [&](int v) { return claimed.intersects(host.incident(v)); };

    Minimizer mz{host, red, blue, host.is_complete()};
    mz.sigma.assign(n, -1);
    mz.used.assign(n, 0);

    int start = 0;
    for (auto& [s, members] : classes) {
        const int end = start + static_cast<int>(members.size());
        for (int v : members) {
            // On complete hosts only vertices that touch a claimed edge can
            // affect the encoding; the rest absorb the leftover labels.
            if (mz.complete_host && !is_support(v)) continue;
            mz.order.push_back(v);
            mz.blocks.emplace_back(start, end);
        }
        start = end;
    }

    mz.search(0);
    if (!mz.have_best)
        throw std::logic_error("canonicalization found no labeling");

    // Complete the permutation deterministically for unassigned vertices.
    std::vector<int>& full = mz.best_sigma;
    {
        std::vector<char> taken(n, 0);
        for (int v = 0; v < n; ++v)
            if (full[v] >= 0) taken[full[v]] = 1;
        int next_free = 0;
        for (int v = 0; v < n; ++v) {
            if (full[v] >= 0) continue;
            while (taken[next_free]) ++next_free;
            full[v] = next_free;
            taken[next_free] = 1;
        }
    }

    CanonicalForm form;
    form.perm = full;
    std::uint64_t h = host.hash();
    for (int i = 7; i >= 0; --i)
        form.code.bytes.push_back(static_cast<char>((h >> (8 * i)) & 0xff));
    form.code.bytes += mz.best;
    return form;
}

}  // namespace

CanonicalCode canonical_code(const HostGraph& host, const EdgeSet& red,
                             const EdgeSet& blue) {
    return canonicalize(host, red, blue).code;
}

CanonicalForm canonical_form(const HostGraph& host, const EdgeSet& red,
                             const EdgeSet& blue) {
    return canonicalize(host, red, blue);
}

std::vector<Move> orbit_reduced_moves(const Position& pos) {
    std::map<CanonicalCode, int> reps;
    for (Move m : legal_moves(pos)) {
        CanonicalCode code = canonical_code(pos.apply(m));
        auto [it, inserted] = reps.emplace(std::move(code), m.edge);
        if (!inserted && m.edge < it->second) it->second = m.edge;
    }
    std::vector<Move> out;
    out.reserve(reps.size());
    for (auto& [code, edge] : reps) out.push_back({edge});
    std::sort(out.begin(), out.end(),
              [](Move a, Move b) { return a.edge < b.edge; });
    return out;
}

}  // namespace egl
