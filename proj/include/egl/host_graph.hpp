#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "egl/edge_set.hpp"

namespace egl {

// The board: a finite simple graph whose edges get claimed. Edge ids are
// dense and assigned in lexicographic order of (i,j), i<j, so boards and
// tablebases reproduce across runs.
class HostGraph {
public:
    static constexpr int kMaxVertices = 16;

    static HostGraph complete(int n);
    static HostGraph from_edges(int n, std::vector<std::pair<int, int>> edges);

    // Text format: line 1 = "n m", then m lines "i j" with 0 <= i < j < n.
    static HostGraph parse(std::istream& in);
    static HostGraph parse_text(const std::string& text);
    std::string to_text() const;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool is_complete() const;

    bool has_edge(int i, int j) const;
    // Dense lexicographic id; throws std::domain_error on loops and non-edges.
    int edge_index(int i, int j) const;
    std::pair<int, int> endpoints(int edge_id) const;

    EdgeSet all_edges() const { return EdgeSet::full(edge_count()); }
    const EdgeSet& incident(int v) const { return incident_[v]; }

    // FNV-1a over (n, m, edge list); identifies the host in tablebase files.
    std::uint64_t hash() const { return hash_; }

    bool operator==(const HostGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    HostGraph() = default;
    void finalize();

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> pair_to_id_;  // n*n, -1 for non-edges
    std::vector<EdgeSet> incident_;
    std::uint64_t hash_ = 0;
};

std::string host_hash_hex(const HostGraph& host);

}  // namespace egl
