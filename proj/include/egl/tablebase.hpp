#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>

#include "egl/canonical.hpp"
#include "egl/game.hpp"

namespace egl {

struct TablebaseLoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TablebaseFingerprint {
    GameKind kind;
    int p = 1;
    int q = 1;
    std::uint64_t host_hash = 0;

    static TablebaseFingerprint of(const GameSpec& spec) {
        return {spec.kind, spec.p, spec.q, spec.host.hash()};
    }
    bool operator==(const TablebaseFingerprint&) const = default;
};

// Persistent map from canonical position codes to game-theoretic winners.
// Lookups against a mismatched spec are refused.
class Tablebase {
public:
    Tablebase() = default;
    explicit Tablebase(TablebaseFingerprint fp) : fp_(fp), bound_(true) {}
    explicit Tablebase(const GameSpec& spec)
        : Tablebase(TablebaseFingerprint::of(spec)) {}

    const TablebaseFingerprint& fingerprint() const { return fp_; }
    bool matches(const GameSpec& spec) const {
        return bound_ && fp_ == TablebaseFingerprint::of(spec);
    }
    void require_match(const GameSpec& spec) const;

    std::optional<PlayerId> lookup(const CanonicalCode& code) const {
        auto it = entries_.find(code);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }
    void store(const CanonicalCode& code, PlayerId w) { entries_[code] = w; }

    std::size_t size() const { return entries_.size(); }
    const auto& entries() const { return entries_; }

private:
    TablebaseFingerprint fp_{GameKind::Clique, 1, 1, 0};
    bool bound_ = false;
    std::unordered_map<CanonicalCode, PlayerId, CanonicalCode::Hash> entries_;
};

// File format: header "EGL1 <kind> <p> <q> <host-hash>", then one
// "<hex-code> <1|2>" line per entry, sorted by code for reproducible diffs.
void save_tablebase(const Tablebase& tb, std::ostream& out);
void save_tablebase(const Tablebase& tb, const std::string& path);
Tablebase load_tablebase(std::istream& in);
Tablebase load_tablebase(const std::string& path);

}  // namespace egl
