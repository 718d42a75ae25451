#pragma once

#include <optional>
#include <unordered_map>

#include "egl/lifts.hpp"

namespace egl {

// Second-player strategy for Star(n+1): the opponent's first edge designates
// v; `base` plays Star(n) as first player on the board without v, and every
// opponent claim at v is answered by another unclaimed edge at v.
class StarLiftPlus1 final : public Strategy {
public:
    StarLiftPlus1(std::shared_ptr<const GameSpec> spec, int n,
                  std::unique_ptr<Strategy> base);
    StarLiftPlus1(const StarLiftPlus1& o);

    Move choose(const Position& pos) const override;
    void notify(const Position& before, Move m) override;
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<StarLiftPlus1>(*this);
    }
    std::string name() const override { return "star-lift+1"; }

    int center() const { return v_; }

private:
    std::shared_ptr<const GameSpec> spec_;
    int n_;
    std::unique_ptr<Strategy> base_;
    int phase_ = 0;
    int red1_ = -1;
    int v_ = -1;
    bool v_reply_pending_ = false;
    VirtualBoard vb_;
};

// Second-player strategy for Star(n+2): reach S3 or S4, install the pairing
// (v1 x, v2 x) plus the cross or double pair, answer every claimed pair
// element with its partner, and delegate the K_n to `base`.
class StarLiftPlus2 final : public Strategy {
public:
    enum class Kind { S3, S4 };

    StarLiftPlus2(std::shared_ptr<const GameSpec> spec, int n,
                  std::unique_ptr<Strategy> base);
    StarLiftPlus2(const StarLiftPlus2& o);

    Move choose(const Position& pos) const override;
    void notify(const Position& before, Move m) override;
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<StarLiftPlus2>(*this);
    }
    std::string name() const override { return "star-lift+2"; }

    char state_tag() const { return tag_; }
    Kind state_kind() const { return kind_; }
    int v1() const { return v1_; }
    int v2() const { return v2_; }
    int w1() const { return w1_; }
    int w2() const { return w2_; }

private:
    void install(const Position& after);

    std::shared_ptr<const GameSpec> spec_;
    int n_;
    std::unique_ptr<Strategy> base_;
    int phase_ = 0;
    int red1_ = -1, blue1_ = -1;
    char tag_ = '?';
    Kind kind_ = Kind::S3;
    int v1_ = -1, v2_ = -1, w1_ = -1, w2_ = -1;
    int missing_ = -1;  // the edge completing S3/S4, our second move
    std::unordered_map<int, int> partner_;
    int pair_reply_pending_ = -1;
    VirtualBoard vb_;
};

}  // namespace egl
