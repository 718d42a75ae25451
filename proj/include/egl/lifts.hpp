#pragma once

#include <optional>

#include "egl/virtual_board.hpp"

namespace egl {

// The five isomorphism types of (two red edges, one blue edge incident to a
// red edge), with labelings for the S1 frame (v1, v2) and the x,y,z frame.
//   A: red path of length 2, blue pendant at a path end
//   B: red path of length 2, blue joining the path ends (triangle)
//   C: two disjoint red edges bridged by the blue edge
//   D: two red edges sharing the blue-carrying vertex
//   E: one red edge on the blue, one red edge disjoint from everything
struct SecondState {
    char tag = '?';
    int v1 = -1, v2 = -1;  // every red edge meets exactly one of these
    int x = -1, y = -1;    // the blue edge, x < y
    int z = -1;            // no red edge to x or y; on every red edge avoiding them
};

// Requires exactly two red and one blue claimed edge with the blue edge
// incident to a red one; throws std::domain_error otherwise.
SecondState classify_second_state(const Position& pos);

// Snapshot of the sub-board game consistent with the inner first-player
// strategy: taken after one of our virtual moves or with the board complete.
struct GoodStateTracker {
    EdgeSet sub_red, sub_blue;  // real edge ids inside the sub-board
    int our_moves = 0, their_moves = 0;
    bool complete = false;
    bool good() const { return complete || our_moves == their_moves + 1; }
};

// Second-player strategy for Clique(n+1) from a first-player Clique(n)
// strategy: after the opponent's first edge uv, the whole star at v is given
// away and `base` plays the remaining K_n as first player.
class CliqueLiftPlus1 final : public Strategy {
public:
    CliqueLiftPlus1(std::shared_ptr<const GameSpec> spec, int n,
                    std::unique_ptr<Strategy> base);
    CliqueLiftPlus1(const CliqueLiftPlus1& o);

    Move choose(const Position& pos) const override;
    void notify(const Position& before, Move m) override;
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<CliqueLiftPlus1>(*this);
    }
    std::string name() const override { return "clique-lift+1"; }

    int excluded_vertex() const { return v_; }
    const VirtualExecutorStrategy* executor() const { return exec_.get(); }

private:
    std::shared_ptr<const GameSpec> spec_;
    int n_;
    std::unique_ptr<Strategy> base_;
    int v_ = -1;
    std::unique_ptr<VirtualExecutorStrategy> exec_;
};

// Second-player strategy for Clique(n+2): reach position S1 (blue v1v2 and a
// blue K_n edge, every v_i-to-K_n edge red) and run `base` on the K_n.
class CliqueLiftPlus2 final : public Strategy {
public:
    struct Snapshot {
        EdgeSet red, blue;  // accounted coloring right after the gift
        bool taken = false;
    };

    CliqueLiftPlus2(std::shared_ptr<const GameSpec> spec, int n,
                    std::unique_ptr<Strategy> base);
    CliqueLiftPlus2(const CliqueLiftPlus2& o);

    Move choose(const Position& pos) const override;
    void notify(const Position& before, Move m) override;
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<CliqueLiftPlus2>(*this);
    }
    std::string name() const override { return "clique-lift+2"; }

    const std::optional<SecondState>& state() const { return state_; }
    const Snapshot& s1_snapshot() const { return snapshot_; }
    const VirtualExecutorStrategy* executor() const { return exec_.get(); }

private:
    std::shared_ptr<const GameSpec> spec_;
    int n_;
    std::unique_ptr<Strategy> base_;
    int phase_ = 0;
    int red1_ = -1, blue1_ = -1;
    std::optional<SecondState> state_;
    Snapshot snapshot_;
    std::unique_ptr<VirtualExecutorStrategy> exec_;
};

// Second-player strategy for Clique(n+3): good-state play on the K_n
// sub-board, response on the x,y,z triangle, gift to S2(H), then mirroring
// v_i w -> v_{3-i} w. The paper's guarantee needs n >= 46 (R(5) <= 46); the
// machinery itself runs for any n >= 3.
class CliqueLiftPlus3 final : public Strategy {
public:
    struct Snapshot {
        EdgeSet red, blue;  // accounted coloring right after the gift
        bool taken = false;
    };

    CliqueLiftPlus3(std::shared_ptr<const GameSpec> spec, int n,
                    std::unique_ptr<Strategy> base);
    CliqueLiftPlus3(const CliqueLiftPlus3& o);

    Move choose(const Position& pos) const override;
    void notify(const Position& before, Move m) override;
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<CliqueLiftPlus3>(*this);
    }
    std::string name() const override { return "clique-lift+3"; }

    bool guarantee_covered() const;  // n >= 46
    int x() const { return x_; }
    int y() const { return y_; }
    int z() const { return z_; }
    int u() const { return u_; }
    int v1() const { return v1_; }
    int v2() const { return v2_; }
    VertexSet shared_neighbors() const { return shared_; }
    const GoodStateTracker& tracker() const { return tracker_; }
    const Snapshot& s2_snapshot() const { return snapshot_; }
    // Pretend red set (real claims plus gifts) for terminal audits.
    EdgeSet accounted_red(const Position& pos) const {
        return pos.claimed1() | vb_.gifted;
    }

private:
    void designate_frame(const Position& pos_after_red2);
    void relabel_and_gift(const EdgeSet& red_now, const EdgeSet& blue_now);

    std::shared_ptr<const GameSpec> spec_;
    int n_;
    std::unique_ptr<Strategy> base_;

    int phase_ = 0;
    int red1_ = -1;
    int x_ = -1, y_ = -1, z_ = -1;
    int u_ = -1, v1_ = -1, v2_ = -1;
    VertexSet shared_ = 0;        // the three shared red H-neighbors
    int early_response_ = -1;     // xz/yz claimed during a waiting skip
    int pending_response_ = -1;   // xz/yz due on our next turn
    int pending_mirror_ = -1;     // v_{3-i}w due on our next turn
    GoodStateTracker tracker_;
    Snapshot snapshot_;
    VirtualBoard vb_;
};

}  // namespace egl
