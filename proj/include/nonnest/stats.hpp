#pragma once

#include "nonnest/poly.hpp"
#include "nonnest/word.hpp"

namespace nonnest {

// N_n(t) with coefficients binom(n,d) binom(n,d+1) / n for d = 0..n-1.
// Integrality of each coefficient is asserted, not assumed. n >= 1.
IntPolynomial narayana(int n);

// Sum of t^{des} over permutations of {1..n} avoiding every pattern in sigma
// (the Eulerian polynomial when sigma is empty).
IntPolynomial sn_descent_polynomial(int n, const PatternSet& sigma);

// For sigma a set of 3-letter patterns with distinct entries, tests whether
// the descent polynomial of C_n({s1 s2 s2 s3 : s in sigma}) factors as
// N_n(t) times the descent polynomial of S_n(sigma).
struct FactorizationCheck {
    bool holds = false;
    IntPolynomial lhs;  // descent polynomial over C_n(doubled sigma)
    IntPolynomial rhs;  // narayana(n) * descent polynomial over S_n(sigma)
};

FactorizationCheck check_factorization(int n, const PatternSet& sigma);

// {s1 s2 s2 s3 : s in sigma}; each member of sigma must have 3 distinct letters.
PatternSet doubled_middle_patterns(const PatternSet& sigma);

}  // namespace nonnest
