#include "egl/tablebase.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace egl {

namespace {

std::string hash_hex(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 0xf];
    return s;
}

std::uint64_t parse_hash_hex(const std::string& s) {
    if (s.size() != 16) throw TablebaseLoadError("bad host hash in header");
    std::uint64_t h = 0;
    for (char c : s) {
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else throw TablebaseLoadError("bad host hash in header");
        h = h << 4 | static_cast<std::uint64_t>(v);
    }
    return h;
}

}  // namespace

void Tablebase::require_match(const GameSpec& spec) const {
    if (!matches(spec))
        throw std::logic_error(
            "tablebase fingerprint does not match the game spec");
}

void save_tablebase(const Tablebase& tb, std::ostream& out) {
    const auto& fp = tb.fingerprint();
    out << "EGL1 " << to_string(fp.kind) << ' ' << fp.p << ' ' << fp.q << ' '
        << hash_hex(fp.host_hash) << '\n';
    std::vector<std::pair<std::string, PlayerId>> rows;
    rows.reserve(tb.size());
    for (const auto& [code, w] : tb.entries()) rows.emplace_back(code.hex(), w);
    std::sort(rows.begin(), rows.end());
    for (const auto& [hex, w] : rows)
        out << hex << ' ' << (w == PlayerId::P1 ? '1' : '2') << '\n';
}

void save_tablebase(const Tablebase& tb, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open tablebase file for write: " + path);
    save_tablebase(tb, out);
}

Tablebase load_tablebase(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw TablebaseLoadError("line 1: missing header");
    std::istringstream header(line);
    std::string magic, kind_str, hash_str;
    int p = 0, q = 0;
    if (!(header >> magic >> kind_str >> p >> q >> hash_str))
        throw TablebaseLoadError("line 1: malformed header");
    if (magic != "EGL1")
        throw TablebaseLoadError("line 1: unsupported version '" + magic + "'");
    GameKind kind;
    if (kind_str == "clique") kind = GameKind::Clique;
    else if (kind_str == "star") kind = GameKind::Star;
    else throw TablebaseLoadError("line 1: unknown game kind '" + kind_str + "'");
    if (p < 1 || q < 1) throw TablebaseLoadError("line 1: bad bias");

    Tablebase tb(TablebaseFingerprint{kind, p, q, parse_hash_hex(hash_str)});

    std::size_t code_len = 0;
    for (int lineno = 2; std::getline(in, line); ++lineno) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string hex, who;
        if (!(row >> hex >> who) || (who != "1" && who != "2"))
            throw TablebaseLoadError("line " + std::to_string(lineno) +
                                     ": malformed entry");
        CanonicalCode code;
        try {
            code = CanonicalCode::from_hex(hex);
        } catch (const std::exception& e) {
            throw TablebaseLoadError("line " + std::to_string(lineno) + ": " +
                                     e.what());
        }
        if (code_len == 0) code_len = code.bytes.size();
        if (code.bytes.size() != code_len || code.bytes.size() < 8)
            throw TablebaseLoadError("line " + std::to_string(lineno) +
                                     ": truncated code");
        tb.store(code, who == "1" ? PlayerId::P1 : PlayerId::P2);
    }
    return tb;
}

Tablebase load_tablebase(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open tablebase file: " + path);
    return load_tablebase(in);
}

}  // namespace egl
