#include "nonnest/nonnesting.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace nonnest {

Matching matching_of(const Word& w) {
    std::map<int, std::pair<int, int>> seen;  // value -> (open, close)
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        auto it = seen.find(w[i]);
        if (it == seen.end()) {
            seen[w[i]] = {i + 1, 0};
        } else if (it->second.second == 0) {
            it->second.second = i + 1;
        } else {
            throw std::invalid_argument("matching_of: value appears more than twice");
        }
    }
    Matching m;
    for (auto& [v, arc] : seen) {
        if (arc.second == 0)
            throw std::invalid_argument("matching_of: value appears only once");
        m.arcs.push_back(arc);
    }
    std::sort(m.arcs.begin(), m.arcs.end());
    return m;
}

bool is_nonnesting(const Word& w) {
    std::map<int, int> count;
    for (int v : w) ++count[v];
    for (auto& [v, c] : count)
        if (c != 2) throw std::invalid_argument("is_nonnesting: value not used exactly twice");

    std::deque<int> open;
    for (int v : w) {
        if (count[v] == 2) {
            open.push_back(v);
            count[v] = 1;
        } else {
            if (open.front() != v) return false;
            open.pop_front();
        }
    }
    return true;
}

bool is_nonnesting_via_matching(const Word& w) {
    Matching m = matching_of(w);
    for (std::size_t i = 1; i < m.arcs.size(); ++i)
        if (m.arcs[i].second < m.arcs[i - 1].second) return false;
    return true;
}

bool is_nonnesting_via_patterns(const Word& w) {
    (void)matching_of(w);  // same precondition as the other routes
    PatternSet nesting(std::vector<Word>{{1, 2, 2, 1}, {2, 1, 1, 2}});
    return avoids_all(w, nesting);
}

NonnestingPermutation NonnestingPermutation::from_word(Word w) {
    if (w.size() % 2 != 0)
        throw std::invalid_argument("nonnesting permutation: odd length");
    int n = static_cast<int>(w.size()) / 2;
    std::vector<int> count(n + 1, 0);
    for (int v : w) {
        if (v < 1 || v > n)
            throw std::invalid_argument("nonnesting permutation: value out of {1..n}");
        ++count[v];
    }
    for (int v = 1; v <= n; ++v)
        if (count[v] != 2)
            throw std::invalid_argument("nonnesting permutation: value not used exactly twice");
    if (!is_nonnesting(w))
        throw std::invalid_argument("nonnesting permutation: word has a nesting");
    return unchecked(std::move(w), n);
}

NonnestingPermutation NonnestingPermutation::unchecked(Word w, int n) {
    NonnestingPermutation p;
    p.word = std::move(w);
    p.n = n;
    return p;
}

Word underlying_permutation(const NonnestingPermutation& p) {
    std::vector<bool> seen(static_cast<std::size_t>(p.n) + 1, false);
    Word out;
    out.reserve(p.n);
    for (int v : p.word) {
        if (!seen[v]) {
            seen[v] = true;
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace nonnest
