#pragma once

#include "nonnest/word.hpp"

#include <random>
#include <vector>

namespace nonnest::testutil {

inline Word random_word(std::mt19937& rng, int min_len, int max_len, int max_val) {
    std::uniform_int_distribution<int> len(min_len, max_len);
    std::uniform_int_distribution<int> val(1, max_val);
    Word w(len(rng));
    for (int& v : w) v = val(rng);
    return w;
}

inline PatternSet random_pattern_set(std::mt19937& rng, int max_patterns) {
    std::uniform_int_distribution<int> count(1, max_patterns);
    std::vector<Word> ps;
    int k = count(rng);
    for (int i = 0; i < k; ++i) ps.push_back(random_word(rng, 3, 4, 4));
    return PatternSet(std::move(ps));
}

// All length-3 patterns with distinct letters.
inline std::vector<Word> s3_patterns() {
    return {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
}

}  // namespace nonnest::testutil
