#include "egl/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace egl {

namespace {

struct BudgetStop {};

struct Solver {
    const GameSpec& spec;
    Tablebase& tb;
    const SolveOptions& options;
    SolveStats stats;
    std::chrono::steady_clock::time_point deadline;

    void check_budget() {
        if (tb.size() > options.budget.max_entries) throw BudgetStop{};
        if ((stats.nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            throw BudgetStop{};
    }

    PlayerId value(const Position& pos) {
        CanonicalCode code = canonical_code(pos);
        if (auto hit = tb.lookup(code)) {
            ++stats.memo_hits;
            return *hit;
        }
        ++stats.nodes;
        check_budget();

        if (pos.is_terminal()) {
            PlayerId w = winner(pos);
            tb.store(code, w);
            return w;
        }
        const PlayerId mover = pos.turn().mover;

        // Children deduplicated by canonical code; the reduction cannot
        // change the value because equal codes have equal values.
        std::vector<std::pair<CanonicalCode, Position>> children;
        {
            std::unordered_set<CanonicalCode, CanonicalCode::Hash> seen;
            for (Move m : legal_moves(pos)) {
                Position child = pos.apply(m);
                CanonicalCode ccode = canonical_code(child);
                if (options.orbit_reduction && !seen.insert(ccode).second)
                    continue;
                children.emplace_back(std::move(ccode), std::move(child));
            }
        }

        // Shallow lookahead: memoized wins first give immediate cutoffs,
        // memoized losses go last.
        std::vector<const std::pair<CanonicalCode, Position>*> unknown, losing;
        for (const auto& c : children) {
            if (auto hit = tb.lookup(c.first)) {
                if (*hit == mover) {
                    tb.store(code, mover);
                    return mover;
                }
                losing.push_back(&c);
            } else {
                unknown.push_back(&c);
            }
        }
        for (const auto* c : unknown) {
            if (value(c->second) == mover) {
                tb.store(code, mover);
                return mover;
            }
        }
        PlayerId w = other(mover);
        tb.store(code, w);
        return w;
    }
};

}  // namespace

SolveResult solve(const Position& pos, Tablebase& tb,
                  const SolveOptions& options) {
    tb.require_match(pos.spec());
    Solver solver{pos.spec(), tb, options};
    solver.deadline = std::chrono::steady_clock::now() +
                      (options.budget.max_time ==
                               std::chrono::milliseconds::max()
                           ? std::chrono::hours(24 * 365)
                           : options.budget.max_time);
    SolveResult result;
    try {
        result.winner = solver.value(pos);
    } catch (const BudgetStop&) {
        result.winner = std::nullopt;
        solver.stats.budget_exceeded = true;
    }
    result.stats = solver.stats;
    return result;
}

PlayerId solve_value(const Position& pos, Tablebase& tb,
                     const SolveOptions& options) {
    SolveResult r = solve(pos, tb, options);
    if (!r.solved()) throw std::runtime_error("solve budget exceeded");
    return *r.winner;
}

std::optional<Move> Policy::move_for(const Position& pos) const {
    CanonicalForm form = canonical_form(pos);
    auto it = moves_.find(form.code);
    if (it == moves_.end()) return std::nullopt;
    std::vector<int> inv = inverse_permutation(form.perm);
    return Move{map_edge(pos.spec().host, inv, it->second.edge)};
}

Policy extract_policy(const GameSpec& spec, PlayerId who, Tablebase& tb,
                      const SolveOptions& options) {
    Position initial = Position::initial(spec);
    PlayerId root = solve_value(initial, tb, options);
    if (root != who)
        throw std::logic_error(std::string("no winning policy: ") +
                               to_string(other(who)) + " wins this game");

    Policy policy(TablebaseFingerprint::of(spec), who);

    // Walk position classes breadth-first from the initial class; one
    // representative per class is enough because isomorphic positions have
    // isomorphic successor families.
    std::unordered_set<CanonicalCode, CanonicalCode::Hash> visited;
    std::vector<Position> frontier{initial};
    visited.insert(canonical_code(initial));
    while (!frontier.empty()) {
        std::vector<Position> next;
        for (const Position& pos : frontier) {
            if (pos.is_terminal()) continue;
            const PlayerId mover = pos.turn().mover;
            const bool want_move =
                mover == who && solve_value(pos, tb, options) == who;
            bool stored = false;
            for (Move m : orbit_reduced_moves(pos)) {
                Position child = pos.apply(m);
                if (want_move && !stored &&
                    solve_value(child, tb, options) == who) {
                    CanonicalForm form = canonical_form(pos);
                    policy.store(form.code,
                                 Move{map_edge(spec.host, form.perm, m.edge)});
                    stored = true;
                }
                CanonicalCode ccode = canonical_code(child);
                if (visited.insert(ccode).second) next.push_back(child);
            }
            if (want_move && !stored)
                throw std::logic_error("winning position has no winning move");
        }
        frontier = std::move(next);
    }
    return policy;
}

std::vector<Position> reachable_positions(const GameSpec& spec) {
    std::vector<Position> out;
    std::unordered_set<std::string> seen;
    auto key = [](const Position& p) {
        std::string k(32, '\0');
        auto put = [&k](int off, std::uint64_t w) {
            for (int i = 0; i < 8; ++i)
                k[off + i] = static_cast<char>((w >> (8 * i)) & 0xff);
        };
        put(0, p.claimed1().word0());
        put(8, p.claimed1().word1());
        put(16, p.claimed2().word0());
        put(24, p.claimed2().word1());
        return k;
    };
    std::vector<Position> frontier{Position::initial(spec)};
    seen.insert(key(frontier[0]));
    while (!frontier.empty()) {
        std::vector<Position> next;
        for (const Position& pos : frontier) {
            out.push_back(pos);
            for (Move m : legal_moves(pos)) {
                Position child = pos.apply(m);
                if (seen.insert(key(child)).second) next.push_back(child);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

namespace {

struct GrantedKey {
    std::uint64_t a, b, c, d;
    std::uint8_t mover;
    std::uint8_t remaining;
    bool operator==(const GrantedKey&) const = default;
};

struct GrantedKeyHash {
    std::size_t operator()(const GrantedKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t x : {k.a, k.b, k.c, k.d,
                                static_cast<std::uint64_t>(k.mover) << 8 |
                                    k.remaining})
            h = (h ^ x) * 1099511628211ull;
        return static_cast<std::size_t>(h);
    }
};

struct GrantedSolver {
    const GameSpec& spec;
    std::unordered_map<GrantedKey, PlayerId, GrantedKeyHash> memo;

    PlayerId value(EdgeSet c1, EdgeSet c2, PlayerId mover, int remaining) {
        EdgeSet free = spec.host.all_edges() - c1 - c2;
        const int free_count = free.count();
        if (free_count == 0) {
            const int s1 = structure_size(spec, c1);
            const int s2 = structure_size(spec, c2);
            if (spec.p1_needs_strict())
                return s1 > s2 ? PlayerId::P1 : PlayerId::P2;
            return s2 > s1 ? PlayerId::P2 : PlayerId::P1;
        }
        remaining = std::min(remaining, free_count);
        if (remaining == 0) {
            // Turn boundary: the other player starts a fresh turn.
            mover = other(mover);
            remaining = std::min(
                mover == PlayerId::P1 ? spec.p : spec.q, free_count);
        }
        GrantedKey key{c1.word0(), c1.word1(), c2.word0(), c2.word1(),
                       static_cast<std::uint8_t>(mover),
                       static_cast<std::uint8_t>(remaining)};
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        PlayerId result = other(mover);
        for (int e = free.lowest(); e >= 0; e = free.next_after(e)) {
            EdgeSet n1 = c1, n2 = c2;
            (mover == PlayerId::P1 ? n1 : n2).set(e);
            if (value(n1, n2, mover, remaining - 1) == mover) {
                result = mover;
                break;
            }
        }
        memo.emplace(key, result);
        return result;
    }
};

}  // namespace

PlayerId solve_granted(const GameSpec& spec, const EdgeSet& claimed1,
                       const EdgeSet& claimed2, PlayerId mover,
                       int remaining) {
    GrantedSolver solver{spec};
    return solver.value(claimed1, claimed2, mover, remaining);
}

MonotonicityReport monotonicity_audit(const GameSpec& spec,
                                      const std::vector<Position>& sample,
                                      std::uint64_t max_checks) {
    MonotonicityReport report;
    Tablebase tb(spec);
    GrantedSolver granted{spec};
    for (const Position& pos : sample) {
        if (pos.is_terminal()) continue;  // vacuous
        PlayerId w = solve_value(pos, tb);
        TurnState ts = pos.turn();
        EdgeSet free = pos.unclaimed();
        for (int e = free.lowest(); e >= 0; e = free.next_after(e)) {
            if (report.checks >= max_checks) {
                report.complete = false;
                return report;
            }
            ++report.checks;
            EdgeSet c1 = pos.claimed1(), c2 = pos.claimed2();
            (w == PlayerId::P1 ? c1 : c2).set(e);
            PlayerId w2 = granted.value(c1, c2, ts.mover, ts.remaining);
            if (w2 != w)
                report.violations.push_back({pos.claimed1(), pos.claimed2(),
                                             e, w, w2});
        }
    }
    return report;
}

}  // namespace egl
