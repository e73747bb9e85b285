#pragma once

#include "nonnest/word.hpp"

#include <utility>
#include <vector>

namespace nonnest {

// Arc diagram of a word in which every distinct value appears exactly twice:
// one arc per value, (open, close) positions 1-based, ordered by open.
struct Matching {
    std::vector<std::pair<int, int>> arcs;
};

// Throws std::invalid_argument unless each distinct value of w appears
// exactly twice.
Matching matching_of(const Word& w);

// True iff scanning left to right, every second occurrence closes the value
// whose first occurrence is oldest among the currently open ones. Throws if
// some value does not appear exactly twice.
bool is_nonnesting(const Word& w);

// Two independent routes to the same predicate, used to cross-check the
// queue simulation above.
bool is_nonnesting_via_matching(const Word& w);  // closes sorted like opens
bool is_nonnesting_via_patterns(const Word& w);  // avoids 1221 and 2112

// A word of length 2n over {1..n}, each value twice, with no nested arcs.
struct NonnestingPermutation {
    Word word;
    int n = 0;

    NonnestingPermutation() = default;

    // Validates the full invariant; throws std::invalid_argument.
    static NonnestingPermutation from_word(Word w);

    // For callers that produced the word through the queue discipline.
    static NonnestingPermutation unchecked(Word w, int n);

    bool operator==(const NonnestingPermutation& o) const { return word == o.word; }
    bool operator<(const NonnestingPermutation& o) const { return word < o.word; }
};

// Arc labels read by open position; equals the subsequence of first copies
// and, by nonnestingness, the subsequence of second copies.
Word underlying_permutation(const NonnestingPermutation& p);

}  // namespace nonnest
