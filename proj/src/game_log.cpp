#include "egl/game_log.hpp"

#include <sstream>

namespace egl {

std::string GameLog::to_text() const {
    std::ostringstream os;
    os << "EGLOG1 " << to_string(kind) << ' ' << p << ' ' << q << ' '
       << (host_label.empty() ? "custom" : host_label) << '\n';
    os << "host " << host.vertex_count() << ' ' << host.edge_count() << '\n';
    for (int e = 0; e < host.edge_count(); ++e) {
        auto [i, j] = host.endpoints(e);
        os << "e " << i << ' ' << j << '\n';
    }
    for (auto& [who, edge] : moves)
        os << to_string(who) << " (" << edge.first << ',' << edge.second
           << ")\n";
    if (summary)
        os << "end " << summary->size1 << ' ' << summary->size2 << ' '
           << to_string(summary->win) << '\n';
    return os.str();
}

GameLog GameLog::parse(std::istream& in) {
    auto fail = [](int lineno, const std::string& what) -> GameLogError {
        return GameLogError("line " + std::to_string(lineno) + ": " + what);
    };

    GameLog log;
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw fail(1, "missing header");
    ++lineno;
    {
        std::istringstream hs(line);
        std::string magic, kind_str;
        if (!(hs >> magic >> kind_str >> log.p >> log.q >> log.host_label))
            throw fail(lineno, "malformed header");
        if (magic != "EGLOG1")
            throw fail(lineno, "unsupported version '" + magic + "'");
        if (kind_str == "clique") log.kind = GameKind::Clique;
        else if (kind_str == "star") log.kind = GameKind::Star;
        else throw fail(lineno, "unknown game kind '" + kind_str + "'");
    }

    if (!std::getline(in, line)) throw fail(2, "missing host line");
    ++lineno;
    int n = 0, m = 0;
    {
        std::istringstream hs(line);
        std::string tag;
        if (!(hs >> tag >> n >> m) || tag != "host")
            throw fail(lineno, "malformed host line");
    }
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < m; ++k) {
        if (!std::getline(in, line)) throw fail(lineno + 1, "missing edge");
        ++lineno;
        std::istringstream es(line);
        std::string tag;
        int i = 0, j = 0;
        if (!(es >> tag >> i >> j) || tag != "e")
            throw fail(lineno, "malformed edge line");
        edges.emplace_back(i, j);
    }
    try {
        log.host = HostGraph::from_edges(n, std::move(edges));
    } catch (const std::exception& e) {
        throw fail(lineno, e.what());
    }

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "P1" || head == "P2") {
            std::string rest;
            ls >> rest;
            int i = 0, j = 0;
            if (std::sscanf(rest.c_str(), "(%d,%d)", &i, &j) != 2)
                throw fail(lineno, "malformed move '" + line + "'");
            log.moves.emplace_back(
                head == "P1" ? PlayerId::P1 : PlayerId::P2,
                std::make_pair(i, j));
        } else if (head == "end") {
            Summary s;
            std::string who;
            if (!(ls >> s.size1 >> s.size2 >> who) ||
                (who != "P1" && who != "P2"))
                throw fail(lineno, "malformed summary");
            s.win = who == "P1" ? PlayerId::P1 : PlayerId::P2;
            log.summary = s;
        } else {
            throw fail(lineno, "unrecognized line '" + line + "'");
        }
    }
    return log;
}

GameLog GameLog::parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

std::optional<GameLog::Summary> GameLog::replay() const {
    GameSpec spec(kind, host, p, q);
    Position pos = Position::initial(spec);
    for (std::size_t k = 0; k < moves.size(); ++k) {
        auto [who, pair] = moves[k];
        if (pos.is_terminal())
            throw GameLogError("move " + std::to_string(k + 1) +
                               " after the game ended");
        if (pos.turn().mover != who)
            throw GameLogError("move " + std::to_string(k + 1) +
                               " by the wrong player");
        int e;
        try {
            e = host.edge_index(pair.first, pair.second);
        } catch (const std::exception& ex) {
            throw GameLogError("move " + std::to_string(k + 1) + ": " +
                               ex.what());
        }
        if (!pos.unclaimed().test(e))
            throw GameLogError("move " + std::to_string(k + 1) +
                               " claims a claimed edge");
        pos = pos.apply(Move{e});
    }
    if (!pos.is_terminal()) return std::nullopt;
    Summary s;
    s.size1 = structure_size(spec, pos.claimed1());
    s.size2 = structure_size(spec, pos.claimed2());
    s.win = winner(pos);
    return s;
}

GameLog log_from_line(const GameSpec& spec, const std::string& host_label,
                      const std::vector<Move>& line, bool with_summary) {
    GameLog log;
    log.kind = spec.kind;
    log.p = spec.p;
    log.q = spec.q;
    log.host_label = host_label;
    log.host = spec.host;
    Position pos = Position::initial(spec);
    for (Move m : line) {
        log.moves.emplace_back(pos.turn().mover,
                               spec.host.endpoints(m.edge));
        pos = pos.apply(m);
    }
    if (with_summary && pos.is_terminal()) {
        GameLog::Summary s;
        s.size1 = structure_size(spec, pos.claimed1());
        s.size2 = structure_size(spec, pos.claimed2());
        s.win = winner(pos);
        log.summary = s;
    }
    return log;
}

}  // namespace egl
