#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "egl/game.hpp"

namespace egl {

struct GameLogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A replayable transcript: host, moves as "player (i,j)" lines, and the
// terminal summary. Replaying through the game rules must reproduce the
// summary exactly.
struct GameLog {
    GameKind kind = GameKind::Clique;
    int p = 1, q = 1;
    std::string host_label;  // "Kn:4", "Ht:2" or "custom"
    HostGraph host = HostGraph::complete(1);
    std::vector<std::pair<PlayerId, std::pair<int, int>>> moves;

    struct Summary {
        int size1 = 0, size2 = 0;  // clique number or max degree per player
        PlayerId win = PlayerId::P2;
        bool operator==(const Summary&) const = default;
    };
    std::optional<Summary> summary;  // absent for partial logs

    std::string to_text() const;
    static GameLog parse(std::istream& in);
    static GameLog parse_text(const std::string& text);

    // Plays the moves through the rules; throws GameLogError on any illegal
    // move or wrong mover, and returns the recomputed summary (empty when
    // the log is partial).
    std::optional<Summary> replay() const;
};

GameLog log_from_line(const GameSpec& spec, const std::string& host_label,
                      const std::vector<Move>& line, bool with_summary);

}  // namespace egl
