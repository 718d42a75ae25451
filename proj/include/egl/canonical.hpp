#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "egl/game.hpp"

namespace egl {

// Canonical form of a two-colored position under vertex relabeling. Equal
// codes on the same host mean some vertex permutation of the host maps
// claimed1 to claimed1 and claimed2 to claimed2. For complete hosts the full
// symmetric group is searched; for general hosts only host automorphisms.
struct CanonicalCode {
    std::string bytes;  // 8-byte host hash, then red and blue bitmask bytes

    std::string hex() const;
    static CanonicalCode from_hex(const std::string& hex);

    bool operator==(const CanonicalCode&) const = default;
    auto operator<=>(const CanonicalCode&) const = default;

    struct Hash {
        std::size_t operator()(const CanonicalCode& c) const {
            std::uint64_t h = 1469598103934665603ull;
            for (unsigned char ch : c.bytes) h = (h ^ ch) * 1099511628211ull;
            return static_cast<std::size_t>(h);
        }
    };
};

// perm[v] is the canonical label of host vertex v; applying perm to the
// position yields exactly the coloring the code encodes.
struct CanonicalForm {
    CanonicalCode code;
    std::vector<int> perm;
};

CanonicalCode canonical_code(const HostGraph& host, const EdgeSet& red,
                             const EdgeSet& blue);
CanonicalForm canonical_form(const HostGraph& host, const EdgeSet& red,
                             const EdgeSet& blue);

inline CanonicalCode canonical_code(const Position& pos) {
    return canonical_code(pos.spec().host, pos.claimed1(), pos.claimed2());
}
inline CanonicalForm canonical_form(const Position& pos) {
    return canonical_form(pos.spec().host, pos.claimed1(), pos.claimed2());
}

// One representative (lowest edge id) per class of moves whose successor
// positions share a canonical code. Solver results are unchanged by the
// reduction.
std::vector<Move> orbit_reduced_moves(const Position& pos);

// Maps an edge through a vertex permutation; the image must be a host edge.
int map_edge(const HostGraph& host, const std::vector<int>& perm, int edge);
EdgeSet map_edge_set(const HostGraph& host, const std::vector<int>& perm,
                     const EdgeSet& edges);
std::vector<int> inverse_permutation(const std::vector<int>& perm);

}  // namespace egl
