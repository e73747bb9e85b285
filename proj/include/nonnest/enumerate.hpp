#pragma once

#include "nonnest/bigint.hpp"
#include "nonnest/nonnesting.hpp"
#include "nonnest/poly.hpp"
#include "nonnest/word.hpp"

#include <functional>

namespace nonnest {

using WordVisitor = std::function<void(const Word&)>;

// Streams every element of C_n exactly once, in lexicographic order.
void for_each_nonnesting(int n, const WordVisitor& visit);

// Streams C_n(ps) in lexicographic order, pruning any prefix that already
// contains a member of ps.
void for_each_avoider(int n, const PatternSet& ps, const WordVisitor& visit);

std::vector<NonnestingPermutation> generate_nonnesting(int n);
std::vector<NonnestingPermutation> generate_avoiders(int n, const PatternSet& ps);

// |C_n(ps)|. With workers > 1 the DFS tree is partitioned at depth 2; the
// count is deterministic either way.
BigInt count_avoiders(int n, const PatternSet& ps, int workers = 1);

// Naive route kept as the oracle for the pruned search: generate all of C_n
// and filter with the reference matcher.
BigInt count_avoiders_naive(int n, const PatternSet& ps);

// Ordinary permutations of {1..n} avoiding every pattern in sigma.
void for_each_sn_avoider(int n, const PatternSet& sigma, const WordVisitor& visit);
BigInt count_sn_avoiders(int n, const PatternSet& sigma);

// Coefficient of t^d counts elements of C_n(ps) with d descents.
IntPolynomial descent_polynomial(int n, const PatternSet& ps);

}  // namespace nonnest
