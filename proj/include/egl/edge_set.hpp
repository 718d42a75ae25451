#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace egl {

// Set of edge ids over a fixed host. Capacity 128 covers every host in
// scope (K16 has 120 edges).
class EdgeSet {
public:
    static constexpr int kCapacity = 128;

    constexpr EdgeSet() : words_{0, 0} {}

    static constexpr EdgeSet empty() { return EdgeSet{}; }

    static EdgeSet full(int count) {
        EdgeSet s;
        for (int i = 0; i < count; ++i) s.set(i);
        return s;
    }

    void set(int e) { words_[word(e)] |= bit(e); }
    void reset(int e) { words_[word(e)] &= ~bit(e); }
    bool test(int e) const { return (words_[word(e)] & bit(e)) != 0; }

    int count() const {
        return std::popcount(words_[0]) + std::popcount(words_[1]);
    }
    bool none() const { return words_[0] == 0 && words_[1] == 0; }

    bool contains(const EdgeSet& other) const {
        return (other.words_[0] & ~words_[0]) == 0 &&
               (other.words_[1] & ~words_[1]) == 0;
    }
    bool intersects(const EdgeSet& other) const {
        return (words_[0] & other.words_[0]) != 0 ||
               (words_[1] & other.words_[1]) != 0;
    }

    // Lowest set edge id, or -1 when empty.
    int lowest() const {
        if (words_[0]) return std::countr_zero(words_[0]);
        if (words_[1]) return 64 + std::countr_zero(words_[1]);
        return -1;
    }

    // Lowest set edge id strictly greater than e, or -1.
    int next_after(int e) const {
        for (int i = e + 1; i < kCapacity; ++i) {
            int w = word(i);
            std::uint64_t rest = words_[w] >> (i & 63);
            if (rest == 0) {
                i = (w + 1) * 64 - 1;
                continue;
            }
            return i + std::countr_zero(rest);
        }
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int e = lowest(); e >= 0; e = next_after(e)) out.push_back(e);
        return out;
    }

    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) {
        a.words_[0] |= b.words_[0];
        a.words_[1] |= b.words_[1];
        return a;
    }
    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) {
        a.words_[0] &= b.words_[0];
        a.words_[1] &= b.words_[1];
        return a;
    }
    // Set difference.
    friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) {
        a.words_[0] &= ~b.words_[0];
        a.words_[1] &= ~b.words_[1];
        return a;
    }
    EdgeSet& operator|=(const EdgeSet& b) { return *this = *this | b; }
    EdgeSet& operator&=(const EdgeSet& b) { return *this = *this & b; }
    EdgeSet& operator-=(const EdgeSet& b) { return *this = *this - b; }

    bool operator==(const EdgeSet&) const = default;

    std::uint64_t word0() const { return words_[0]; }
    std::uint64_t word1() const { return words_[1]; }

    struct Hash {
        std::size_t operator()(const EdgeSet& s) const {
            std::uint64_t h = 1469598103934665603ull;
            h = (h ^ s.words_[0]) * 1099511628211ull;
            h = (h ^ s.words_[1]) * 1099511628211ull;
            return static_cast<std::size_t>(h);
        }
    };

private:
    static constexpr int word(int e) { return e >> 6; }
    static constexpr std::uint64_t bit(int e) {
        return std::uint64_t{1} << (e & 63);
    }
    std::array<std::uint64_t, 2> words_;
};

// Vertex subsets are small enough for a plain 32-bit mask.
using VertexSet = std::uint32_t;

inline VertexSet all_vertices(int n) {
    return n >= 32 ? ~VertexSet{0} : ((VertexSet{1} << n) - 1);
}

}  // namespace egl
