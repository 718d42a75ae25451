#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "egl/game.hpp"
#include "egl/solver.hpp"

namespace egl {

// A strategy broke its own protocol (illegal inner move, impossible state).
struct StrategyFault : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic move selection with private state. choose() must be a pure
// function of the current state; all state updates happen in notify(), which
// the driver calls once for every applied move, own moves included.
class Strategy {
public:
    virtual ~Strategy() = default;

    virtual Move choose(const Position& pos) const = 0;
    virtual void notify(const Position& before, Move m) {
        (void)before;
        (void)m;
    }
    // Fresh copy of the current state; exhaustive verification forks one
    // per adversary branch.
    virtual std::unique_ptr<Strategy> clone() const = 0;
    virtual std::string name() const = 0;
};

inline Move lowest_legal(const Position& pos) {
    int e = pos.unclaimed().lowest();
    if (e < 0) throw StrategyFault("no legal move on terminal position");
    return {e};
}

// Always claims the lowest-indexed unclaimed edge. Baseline and skip filler.
class LowestEdgeStrategy final : public Strategy {
public:
    Move choose(const Position& pos) const override {
        return lowest_legal(pos);
    }
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<LowestEdgeStrategy>(*this);
    }
    std::string name() const override { return "lowest"; }
};

// Plays tablebase-optimal moves for one side: a winning child if any exists,
// otherwise the lowest edge. For the winning player this realizes a Policy.
class TablebaseStrategy final : public Strategy {
public:
    TablebaseStrategy(std::shared_ptr<const GameSpec> spec, PlayerId side,
                      std::shared_ptr<Tablebase> tb)
        : spec_(std::move(spec)), side_(side), tb_(std::move(tb)) {
        tb_->require_match(*spec_);
    }

    Move choose(const Position& pos) const override;
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<TablebaseStrategy>(*this);
    }
    std::string name() const override { return "policy"; }

private:
    std::shared_ptr<const GameSpec> spec_;
    PlayerId side_;
    std::shared_ptr<Tablebase> tb_;  // shared solve cache
};

}  // namespace egl
