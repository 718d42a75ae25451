#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "egl/canonical.hpp"
#include "egl/game.hpp"
#include "egl/tablebase.hpp"

namespace egl {

struct SolveBudget {
    std::chrono::milliseconds max_time{std::chrono::milliseconds::max()};
    std::size_t max_entries = 200'000'000;
};

struct SolveOptions {
    bool orbit_reduction = true;
    SolveBudget budget;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t memo_hits = 0;
    bool budget_exceeded = false;
};

// winner is empty exactly when the budget ran out; never a guess.
struct SolveResult {
    std::optional<PlayerId> winner;
    SolveStats stats;

    bool solved() const { return winner.has_value(); }
};

SolveResult solve(const Position& pos, Tablebase& tb,
                  const SolveOptions& options = {});

// Convenience for positions known to be within budget.
PlayerId solve_value(const Position& pos, Tablebase& tb,
                     const SolveOptions& options = {});

// A winning move per reachable winning position class for `who`, stored in
// canonical coordinates. Following it from any winning position keeps the
// game won.
class Policy {
public:
    Policy(TablebaseFingerprint fp, PlayerId who) : fp_(fp), who_(who) {}

    PlayerId player() const { return who_; }
    const TablebaseFingerprint& fingerprint() const { return fp_; }

    void store(const CanonicalCode& code, Move canonical_move) {
        moves_[code] = canonical_move;
    }
    // The winning move mapped back into the coordinates of `pos`.
    std::optional<Move> move_for(const Position& pos) const;

    std::size_t size() const { return moves_.size(); }

private:
    TablebaseFingerprint fp_;
    PlayerId who_;
    std::unordered_map<CanonicalCode, Move, CanonicalCode::Hash> moves_;
};

// Requires `who` to win the initial position; throws otherwise.
Policy extract_policy(const GameSpec& spec, PlayerId who, Tablebase& tb,
                      const SolveOptions& options = {});

// Every position reachable from the initial one under the turn schedule,
// without symmetry reduction. Intended for small hosts.
std::vector<Position> reachable_positions(const GameSpec& spec);

// Exact minimax over explicit turn state, for positions whose claim counts
// the strict schedule cannot produce (the winner was granted edges). The
// mover and the claims left in their current turn are passed through
// unchanged; the schedule resumes normally afterwards.
PlayerId solve_granted(const GameSpec& spec, const EdgeSet& claimed1,
                       const EdgeSet& claimed2, PlayerId mover, int remaining);

struct MonotonicityViolation {
    EdgeSet claimed1, claimed2;
    int granted_edge;
    PlayerId winner_before, winner_after;
};

struct MonotonicityReport {
    std::vector<MonotonicityViolation> violations;
    std::uint64_t checks = 0;
    bool complete = true;
};

// Remark-style audit: for each sampled position won by player i, grant i one
// extra unclaimed edge (every choice of edge) while leaving the turn where it
// was, re-solve, and report any flip.
MonotonicityReport monotonicity_audit(const GameSpec& spec,
                                      const std::vector<Position>& sample,
                                      std::uint64_t max_checks = UINT64_MAX);

}  // namespace egl
