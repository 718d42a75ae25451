#include "egl/host_graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace egl {

HostGraph HostGraph::complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return from_edges(n, std::move(edges));
}

HostGraph HostGraph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0 || n > kMaxVertices)
        throw std::domain_error("host vertex count out of range");
    for (auto& [i, j] : edges) {
        if (i > j) std::swap(i, j);
        if (i == j) throw std::domain_error("host graph has a loop");
        if (i < 0 || j >= n) throw std::domain_error("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::domain_error("duplicate edge in host graph");
    if (static_cast<int>(edges.size()) > EdgeSet::kCapacity)
        throw std::domain_error("host graph has too many edges");

    HostGraph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.finalize();
    return g;
}

void HostGraph::finalize() {
    pair_to_id_.assign(static_cast<std::size_t>(n_) * n_, -1);
    incident_.assign(n_, EdgeSet{});
    for (int id = 0; id < edge_count(); ++id) {
        auto [i, j] = edges_[id];
        pair_to_id_[i * n_ + j] = id;
        pair_to_id_[j * n_ + i] = id;
        incident_[i].set(id);
        incident_[j].set(id);
    }
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) { h = (h ^ x) * 1099511628211ull; };
    mix(static_cast<std::uint64_t>(n_));
    mix(static_cast<std::uint64_t>(edges_.size()));
    for (auto [i, j] : edges_) mix((static_cast<std::uint64_t>(i) << 32) | j);
    hash_ = h;
}

bool HostGraph::is_complete() const {
    return edge_count() == n_ * (n_ - 1) / 2;
}

bool HostGraph::has_edge(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j) return false;
    return pair_to_id_[i * n_ + j] >= 0;
}

int HostGraph::edge_index(int i, int j) const {
    if (i == j) throw std::domain_error("loop is not an edge");
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::domain_error("vertex out of range");
    int id = pair_to_id_[i * n_ + j];
    if (id < 0) throw std::domain_error("pair is not a host edge");
    return id;
}

std::pair<int, int> HostGraph::endpoints(int edge_id) const {
    if (edge_id < 0 || edge_id >= edge_count())
        throw std::domain_error("edge id out of range");
    return edges_[edge_id];
}

HostGraph HostGraph::parse(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("host file: bad header line");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int k = 0; k < m; ++k) {
        int i = 0, j = 0;
        if (!(in >> i >> j))
            throw std::runtime_error("host file: truncated edge list at edge " +
                                     std::to_string(k + 1));
        if (i >= j)
            throw std::runtime_error("host file: edge " + std::to_string(k + 1) +
                                     " must satisfy i < j");
        edges.emplace_back(i, j);
    }
    return from_edges(n, std::move(edges));
}

HostGraph HostGraph::parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

std::string HostGraph::to_text() const {
    std::ostringstream out;
    out << n_ << ' ' << edge_count() << '\n';
    for (auto [i, j] : edges_) out << i << ' ' << j << '\n';
    return out.str();
}

std::string host_hash_hex(const HostGraph& host) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = host.hash();
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 0xf];
    return s;
}

}  // namespace egl
