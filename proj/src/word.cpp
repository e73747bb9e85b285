#include "nonnest/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nonnest {

Word parse_word(const std::string& text) {
    bool has_space = std::any_of(text.begin(), text.end(),
                                 [](unsigned char c) { return std::isspace(c); });
    Word w;
    if (has_space) {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size() || v < 1)
                throw std::invalid_argument("bad word token: '" + tok + "'");
            w.push_back(v);
        }
        return w;
    }
    for (char c : text) {
        if (c < '1' || c > '9')
            throw std::invalid_argument(
                "compact word syntax allows digits 1-9 only: '" + text + "'");
        w.push_back(c - '0');
    }
    return w;
}

std::string format_word(const Word& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out << ' ';
        out << w[i];
    }
    return out.str();
}

std::string format_word_compact(const Word& w) {
    std::string s;
    for (int v : w) {
        if (v > 9) throw std::invalid_argument("compact form needs values <= 9");
        s.push_back(static_cast<char>('0' + v));
    }
    return s;
}

int max_value(const Word& w) {
    return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

int distinct_count(const Word& w) {
    return static_cast<int>(std::set<int>(w.begin(), w.end()).size());
}

Word standardize(const Word& w) {
    std::map<int, int> rank;
    for (int v : w) rank[v] = 0;
    int next = 1;
    for (auto& [v, r] : rank) r = next++;
    Word out;
    out.reserve(w.size());
    for (int v : w) out.push_back(rank[v]);
    return out;
}

Word reversed(const Word& w) {
    return Word(w.rbegin(), w.rend());
}

Word complemented(const Word& w) {
    int n = max_value(w);
    Word out;
    out.reserve(w.size());
    for (int v : w) out.push_back(n + 1 - v);
    return out;
}

Word reverse_complemented(const Word& w) {
    return complemented(reversed(w));
}

int descent_count(const Word& w) {
    int d = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] > w[i]) ++d;
    return d;
}

namespace {

// Extends a partial assignment of pattern values to word values. assigned[v]
// is the word value matched to pattern value v, or 0.
bool assignment_ok(const std::vector<int>& assigned, int pat_value, int word_value) {
    for (std::size_t u = 1; u < assigned.size(); ++u) {
        int a = assigned[u];
        if (a == 0) continue;
        int v = static_cast<int>(u);
        if (v == pat_value) {
            if (a != word_value) return false;
        } else if (v < pat_value) {
            if (a >= word_value) return false;
        } else {
            if (a <= word_value) return false;
        }
    }
    return true;
}

bool match_from(const Word& w, const Word& p, std::size_t wi, std::size_t pi,
                std::vector<int>& assigned) {
    if (pi == p.size()) return true;
    if (w.size() - wi < p.size() - pi) return false;
    for (std::size_t i = wi; i + (p.size() - pi) <= w.size(); ++i) {
        int pv = p[pi];
        if (!assignment_ok(assigned, pv, w[i])) continue;
        int saved = assigned[pv];
        assigned[pv] = w[i];
        if (match_from(w, p, i + 1, pi + 1, assigned)) return true;
        assigned[pv] = saved;
    }
    return false;
}

}  // namespace

bool contains_pattern(const Word& w, const Word& p) {
    if (p.empty()) throw std::invalid_argument("contains_pattern: empty pattern");
    if (w.size() < p.size()) return false;
    Word sp = standardize(p);
    std::vector<int> assigned(static_cast<std::size_t>(max_value(sp)) + 1, 0);
    return match_from(w, sp, 0, 0, assigned);
}

PatternSet::PatternSet(std::vector<Word> raw, std::string lbl) : label(std::move(lbl)) {
    for (auto& p : raw) {
        if (p.empty()) throw std::invalid_argument("pattern set member is empty");
        p = standardize(p);
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    patterns = std::move(raw);
}

PatternSet parse_pattern_set(const std::string& text) {
    std::vector<Word> members;
    std::string cur;
    auto flush = [&] {
        // trim
        auto b = cur.find_first_not_of(" \t");
        auto e = cur.find_last_not_of(" \t");
        if (b == std::string::npos) {
            cur.clear();
            return;
        }
        members.push_back(parse_word(cur.substr(b, e - b + 1)));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    flush();
    return PatternSet(std::move(members), text);
}

std::string format_pattern_set(const PatternSet& ps) {
    std::string out;
    for (std::size_t i = 0; i < ps.patterns.size(); ++i) {
        if (i) out += ",";
        bool compact = max_value(ps.patterns[i]) <= 9;
        out += compact ? format_word_compact(ps.patterns[i]) : format_word(ps.patterns[i]);
    }
    return out;
}

bool avoids_all(const Word& w, const PatternSet& ps) {
    for (const Word& p : ps.patterns)
        if (contains_pattern(w, p)) return false;
    return true;
}

std::vector<PatternSet> symmetry_orbit(const PatternSet& ps) {
    auto image = [&](Word (*op)(const Word&)) {
        std::vector<Word> out;
        out.reserve(ps.patterns.size());
        for (const Word& p : ps.patterns) out.push_back(standardize(op(p)));
        return PatternSet(std::move(out));
    };
    std::vector<PatternSet> orbit{ps, image(&reversed), image(&complemented),
                                  image(&reverse_complemented)};
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

}  // namespace nonnest
