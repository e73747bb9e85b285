#pragma once

#include "nonnest/bigint.hpp"

#include <string>
#include <vector>

namespace nonnest {

// Polynomial in t with big-integer coefficients, constant term first.
// Trailing zero coefficients are trimmed on construction.
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
    BigInt coeff(int d) const;
    BigInt at_one() const;  // sum of coefficients

    bool is_palindromic() const;

    bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;

    std::string to_string() const;  // e.g. "1 + 3t + t^2"
};

}  // namespace nonnest
