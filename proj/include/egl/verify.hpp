#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "egl/strategy.hpp"

namespace egl {

// Terminal-position test; receives the full move line and the strategy
// instance that played it, so audits can inspect strategy labels.
using TerminalPredicate = std::function<bool(
    const Position& terminal, const std::vector<Move>& line,
    const Strategy& strat)>;

TerminalPredicate pred_winner_is(PlayerId who);
TerminalPredicate pred_no_k_clique(int k);  // on Player 1's claimed graph

struct ExhaustOptions {
    std::uint64_t max_nodes = UINT64_MAX;
    // Orbit-reduce opponent moves; only sound for symmetric strategies.
    bool symmetric_mode = false;
};

struct ExhaustResult {
    std::uint64_t lines = 0;
    std::uint64_t nodes = 0;
    bool complete = true;
    std::optional<std::vector<Move>> counterexample;

    bool certified() const { return complete && !counterexample; }
};

// Traverses every legal opponent line, playing `proto` for `as_player`,
// evaluating the predicate at each terminal. Stops at the first violation;
// depth-first in edge order, so the reported line is lexicographically least.
ExhaustResult adversary_exhaust(const GameSpec& spec, const Strategy& proto,
                                PlayerId as_player,
                                const TerminalPredicate& pred,
                                const ExhaustOptions& options = {});

// Solver winners for Clique(n) and Star(n) over a range of n.
struct RangeResults {
    int lo = 0, hi = -1;
    std::map<int, std::optional<PlayerId>> clique;  // unset value = unsolved
    std::map<int, std::optional<PlayerId>> star;
};

RangeResults solve_range(int lo, int hi, const SolveBudget& budget = {});

// Finite instances of the lift implications over all solved n: a
// first-player win at n forces second-player wins at the lifted sizes.
struct ImplicationReport {
    std::vector<std::string> violations;  // expected none
    std::vector<std::string> notes;       // implications out of solvable range
    std::vector<int> gaps;                // unsolved n
    std::string to_text(const RangeResults& results) const;
};

ImplicationReport implication_suite(const RangeResults& results);

// Winner table plus the running fraction of second-player wins among
// solved n >= 3. Finite evidence only.
struct DensityReport {
    int clique_solved = 0, clique_p2 = 0;
    int star_solved = 0, star_p2 = 0;
    std::vector<int> unsolved;

    std::string to_text(const RangeResults& results) const;
    std::string to_machine(const RangeResults& results) const;
};

DensityReport density_report(const RangeResults& results);

}  // namespace egl
