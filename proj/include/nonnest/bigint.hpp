#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace nonnest {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(const BigInt& n, const BigInt& k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt kk = k;
    if (n - k < kk) kk = n - k;
    BigInt r = 1;
    for (BigInt i = 1; i <= kk; ++i) {
        r *= n - kk + i;
        r /= i;  // exact at every step
    }
    return r;
}

inline BigInt catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: negative index");
    return binomial(2 * BigInt(n), n) / (n + 1);
}

// Fibonacci with the convention F_0 = F_1 = 1.
inline BigInt fibonacci(int n) {
    if (n < 0) throw std::invalid_argument("fibonacci: negative index");
    BigInt a = 1, b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

inline BigInt int_pow(const BigInt& base, int exp) {
    if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
    BigInt r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// Converts an exact rational known to be integral; throws otherwise.
inline BigInt rational_to_integer(const Rational& q) {
    if (denominator(q) != 1)
        throw std::domain_error("expected integer, got " + q.str());
    return numerator(q);
}

inline Rational parse_rational(const std::string& s) {
    return Rational(s);
}

}  // namespace nonnest
