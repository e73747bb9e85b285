#pragma once

#include "nonnest/bigint.hpp"
#include "nonnest/word.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nonnest {

// Bumped whenever counting semantics change; cached lines from other
// versions are ignored.
inline constexpr int kEngineVersion = 1;

// Append-only JSON-lines store of exact counts, keyed by (pattern set, n).
// One writer per process; reads tolerate unknown or malformed lines.
class CountCache {
  public:
    CountCache() = default;
    explicit CountCache(std::string path);

    bool enabled() const { return !path_.empty(); }
    const std::string& path() const { return path_; }

    std::optional<BigInt> lookup(const PatternSet& ps, int n) const;
    void record(const PatternSet& ps, int n, const BigInt& count);

    // Writes entries recorded since load, appending to the file.
    void flush();

    std::size_t hit_count() const { return hits_; }
    // Keys that were served from the file in this session, for spot checks.
    const std::vector<std::pair<std::string, int>>& served() const { return served_; }

  private:
    static std::string key_of(const PatternSet& ps);

    std::string path_;
    std::map<std::pair<std::string, int>, BigInt> entries_;
    std::vector<std::pair<std::pair<std::string, int>, BigInt>> pending_;
    mutable std::vector<std::pair<std::string, int>> served_;
    mutable std::size_t hits_ = 0;
};

}  // namespace nonnest
