#include "egl/verify.hpp"

#include <sstream>

#include "egl/canonical.hpp"

namespace egl {

TerminalPredicate pred_winner_is(PlayerId who) {
    return [who](const Position& pos, const std::vector<Move>&,
                 const Strategy&) { return winner(pos) == who; };
}

TerminalPredicate pred_no_k_clique(int k) {
    return [k](const Position& pos, const std::vector<Move>&,
               const Strategy&) {
        return clique_number(pos.spec().host, pos.claimed1()) < k;
    };
}

namespace {

struct Exhauster {
    const GameSpec& spec;
    PlayerId as_player;
    const TerminalPredicate& pred;
    const ExhaustOptions& options;
    ExhaustResult result;
    std::vector<Move> line;

    // Returns true to abort the traversal.
    bool walk(const Position& pos, Strategy& strat) {
        if (++result.nodes > options.max_nodes) {
            result.complete = false;
            return true;
        }
        if (pos.is_terminal()) {
            ++result.lines;
            if (!pred(pos, line, strat)) {
                result.counterexample = line;
                return true;
            }
            return false;
        }
        if (pos.turn().mover == as_player) {
            Move m = strat.choose(pos);
            if (!pos.unclaimed().test(m.edge)) {
                result.counterexample = line;  // illegal move is a violation
                return true;
            }
            strat.notify(pos, m);
            line.push_back(m);
            bool stop = walk(pos.apply(m), strat);
            line.pop_back();
            return stop;
        }
        auto moves = options.symmetric_mode ? orbit_reduced_moves(pos)
                                            : legal_moves(pos);
        for (Move m : moves) {
            auto branch = strat.clone();
            branch->notify(pos, m);
            line.push_back(m);
            bool stop = walk(pos.apply(m), *branch);
            line.pop_back();
            if (stop) return true;
        }
        return false;
    }
};

}  // namespace

ExhaustResult adversary_exhaust(const GameSpec& spec, const Strategy& proto,
                                PlayerId as_player,
                                const TerminalPredicate& pred,
                                const ExhaustOptions& options) {
    Exhauster ex{spec, as_player, pred, options};
    auto strat = proto.clone();
    ex.walk(Position::initial(spec), *strat);
    return ex.result;
}

RangeResults solve_range(int lo, int hi, const SolveBudget& budget) {
    RangeResults out;
    out.lo = lo;
    out.hi = hi;
    SolveOptions options;
    options.budget = budget;
    for (int n = lo; n <= hi; ++n) {
        {
            GameSpec spec(GameKind::Clique, HostGraph::complete(n));
            Tablebase tb(spec);
            out.clique[n] = solve(Position::initial(spec), tb, options).winner;
        }
        {
            GameSpec spec(GameKind::Star, HostGraph::complete(n));
            Tablebase tb(spec);
            out.star[n] = solve(Position::initial(spec), tb, options).winner;
        }
    }
    return out;
}

namespace {

std::optional<PlayerId> lookup(
    const std::map<int, std::optional<PlayerId>>& m, int n) {
    auto it = m.find(n);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

}  // namespace

ImplicationReport implication_suite(const RangeResults& results) {
    ImplicationReport report;
    auto check = [&report](const char* game, int n, int delta,
                           std::optional<PlayerId> target) {
        if (!target) return;
        if (*target != PlayerId::P2) {
            std::ostringstream os;
            os << game << "(" << n << ") is a P1 win but " << game << "("
               << n + delta << ") is not a P2 win";
            report.violations.push_back(os.str());
        }
    };
    for (auto& [n, w] : results.clique) {
        if (!w) {
            report.gaps.push_back(n);
            continue;
        }
        if (*w != PlayerId::P1) continue;
        if (n >= 2) check("Clique", n, 1, lookup(results.clique, n + 1));
        if (n >= 3) check("Clique", n, 2, lookup(results.clique, n + 2));
        if (n >= 46) {
            check("Clique", n, 3, lookup(results.clique, n + 3));
        } else {
            std::ostringstream os;
            os << "Clique(" << n << ") is a P1 win; the +3 implication needs "
               << "n >= 46, out of solvable range";
            report.notes.push_back(os.str());
        }
    }
    for (auto& [n, w] : results.star) {
        if (!w) {
            report.gaps.push_back(n);
            continue;
        }
        if (*w != PlayerId::P1 || n < 3) continue;
        check("Star", n, 1, lookup(results.star, n + 1));
        check("Star", n, 2, lookup(results.star, n + 2));
    }
    return report;
}

std::string ImplicationReport::to_text(const RangeResults& results) const {
    std::ostringstream os;
    os << "implication suite over n = " << results.lo << ".." << results.hi
       << "\n";
    if (violations.empty()) os << "  no violations\n";
    for (auto& v : violations) os << "  VIOLATION: " << v << "\n";
    for (auto& n : notes) os << "  note: " << n << "\n";
    if (!gaps.empty()) {
        os << "  unsolved:";
        for (int n : gaps) os << ' ' << n;
        os << "\n";
    }
    return os.str();
}

DensityReport density_report(const RangeResults& results) {
    DensityReport report;
    for (auto& [n, w] : results.clique) {
        if (!w) {
            report.unsolved.push_back(n);
            continue;
        }
        if (n < 3) continue;
        ++report.clique_solved;
        if (*w == PlayerId::P2) ++report.clique_p2;
    }
    for (auto& [n, w] : results.star) {
        if (!w) continue;  // already listed once
        if (n < 3) continue;
        ++report.star_solved;
        if (*w == PlayerId::P2) ++report.star_p2;
    }
    return report;
}

std::string DensityReport::to_text(const RangeResults& results) const {
    std::ostringstream os;
    os << "winner table (finite evidence only) for n = " << results.lo << ".."
       << results.hi << "\n";
    os << "  n  clique  star\n";
    for (auto& [n, w] : results.clique) {
        auto s = lookup(results.star, n);
        os << "  " << n << "  "
           << (w ? to_string(*w) : "unsolved") << "      "
           << (s ? to_string(*s) : "unsolved") << "\n";
    }
    auto frac = [](int p2, int total) -> std::string {
        if (total == 0) return "undefined (no solved n >= 3)";
        std::ostringstream f;
        f << p2 << "/" << total << " = " << (double)p2 / total;
        return f.str();
    };
    os << "  P2-win fraction among solved n >= 3: clique "
       << frac(clique_p2, clique_solved) << ", star "
       << frac(star_p2, star_solved) << "\n";
    if (!unsolved.empty()) {
        os << "  unsolved:";
        for (int n : unsolved) os << ' ' << n;
        os << "\n";
    }
    return os.str();
}

std::string DensityReport::to_machine(const RangeResults& results) const {
    std::ostringstream os;
    for (auto& [n, w] : results.clique)
        if (w) os << n << " clique " << to_string(*w) << "\n";
    for (auto& [n, w] : results.star)
        if (w) os << n << " star " << to_string(*w) << "\n";
    return os.str();
}

}  // namespace egl
