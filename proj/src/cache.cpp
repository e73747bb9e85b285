#include "nonnest/cache.hpp"

#include <json.hpp>

#include <fstream>

namespace nonnest {

using nlohmann::json;

CountCache::CountCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;  // nothing cached yet
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) continue;  // tolerate corrupt lines
        if (j.value("engineVersion", -1) != kEngineVersion) continue;
        if (!j.contains("patterns") || !j.contains("n") || !j.contains("count")) continue;
        std::string key;
        for (const auto& p : j["patterns"]) {
            if (!key.empty()) key += ",";
            key += p.get<std::string>();
        }
        entries_[{key, j["n"].get<int>()}] = BigInt(j["count"].get<std::string>());
    }
}

std::string CountCache::key_of(const PatternSet& ps) {
    return format_pattern_set(ps);
}

std::optional<BigInt> CountCache::lookup(const PatternSet& ps, int n) const {
    auto it = entries_.find({key_of(ps), n});
    if (it == entries_.end()) return std::nullopt;
    ++hits_;
    served_.push_back(it->first);
    return it->second;
}

void CountCache::record(const PatternSet& ps, int n, const BigInt& count) {
    auto key = std::make_pair(key_of(ps), n);
    if (entries_.count(key)) return;
    entries_[key] = count;
    pending_.push_back({key, count});
}

void CountCache::flush() {
    if (path_.empty() || pending_.empty()) return;
    std::ofstream out(path_, std::ios::app);
    for (const auto& [key, count] : pending_) {
        json j;
        j["patterns"] = json::array();
        std::string token;
        for (char c : key.first) {
            if (c == ',') {
                j["patterns"].push_back(token);
                token.clear();
            } else {
                token.push_back(c);
            }
        }
        if (!token.empty()) j["patterns"].push_back(token);
        j["n"] = key.second;
        j["count"] = count.str();
        j["engineVersion"] = kEngineVersion;
        out << j.dump() << "\n";
    }
    pending_.clear();
}

}  // namespace nonnest
