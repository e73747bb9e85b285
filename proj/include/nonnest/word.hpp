#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nonnest {

// A word is a finite sequence of positive integers. Words carry patterns,
// multiset permutations, and ordinary permutations alike; the empty word
// is allowed.
using Word = std::vector<int>;

// Parsing: a string with whitespace is read as decimal values separated by
// whitespace; a string without whitespace is read as compact digits, one
// value per character (values 1..9 only).
Word parse_word(const std::string& text);
std::string format_word(const Word& w);          // space-separated decimals
std::string format_word_compact(const Word& w);  // digits; requires values <= 9

int max_value(const Word& w);  // 0 for the empty word
int distinct_count(const Word& w);

// Order-isomorphic relabeling onto {1..k}; idempotent, multiplicity-preserving.
Word standardize(const Word& w);

Word reversed(const Word& w);
Word complemented(const Word& w);  // entry -> max+1-entry; identity on the empty word
Word reverse_complemented(const Word& w);

// |{i : w_i > w_{i+1}}|
int descent_count(const Word& w);

// True iff some subsequence of w agrees with p in all strict inequalities
// and all equalities of letters. Backtracking over an order-preserving
// assignment of the pattern's distinct values; p must be nonempty.
bool contains_pattern(const Word& w, const Word& p);

// A normalized avoidance constraint: members standardized, duplicate-free,
// nonempty, kept sorted.
struct PatternSet {
    std::vector<Word> patterns;  // sorted, each standardized
    std::string label;

    PatternSet() = default;
    explicit PatternSet(std::vector<Word> raw, std::string label = "");

    bool empty() const { return patterns.empty(); }
    std::size_t size() const { return patterns.size(); }
    bool operator==(const PatternSet& other) const { return patterns == other.patterns; }
    bool operator<(const PatternSet& other) const { return patterns < other.patterns; }
};

// Comma-separated words ("123,231"); the empty string is the empty set.
PatternSet parse_pattern_set(const std::string& text);
std::string format_pattern_set(const PatternSet& ps);

bool avoids_all(const Word& w, const PatternSet& ps);

// The <=4 images of ps under identity, reversal, complement and both,
// each standardized and deduplicated.
std::vector<PatternSet> symmetry_orbit(const PatternSet& ps);

}  // namespace nonnest
