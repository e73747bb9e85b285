#pragma once

#include "nonnest/bigint.hpp"

#include <vector>

namespace nonnest {

// Truncated power series with exact rational coefficients c_0..c_N.
// Binary operations truncate to the smaller order. No floating point.
struct Series {
    std::vector<Rational> coeffs;  // size = order + 1

    Series() : coeffs{Rational(0)} {}
    explicit Series(std::vector<Rational> c);

    // Polynomial a_0 + a_1 x + ... extended with zeros to the given order.
    static Series polynomial(const std::vector<Rational>& a, int order);
    static Series constant(const Rational& value, int order);

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const Rational& coeff(int k) const;

    // Drops the first k coefficients (division by x^k); the dropped
    // coefficients must all be zero.
    Series shift_down(int k) const;
    Series truncated(int order) const;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);

// q with mul(q, b) = a to the common order; b must have nonzero constant term.
Series div(const Series& a, const Series& b);

// s with mul(s, s) = a to order; a must have constant term 1.
Series sqrt_series(const Series& a);

// n! * [x^n] of 2/(3 - e^{2x}) for n = 0..order, all-integer via the
// convolution recurrence of A' = 3A^2 - 2A, A(0) = 1.
std::vector<BigInt> egf_coefficients_geometric_exp(int order);

}  // namespace nonnest
