#include "nonnest/poly.hpp"

#include <sstream>

namespace nonnest {

namespace {
void trim(std::vector<BigInt>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) {
    trim(coeffs);
}

BigInt IntPolynomial::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs.size())) return 0;
    return coeffs[d];
}

BigInt IntPolynomial::at_one() const {
    BigInt s = 0;
    for (const auto& c : coeffs) s += c;
    return s;
}

bool IntPolynomial::is_palindromic() const {
    // Symmetry over the support: leading zero coefficients are excluded,
    // matching the usual reading for descent distributions whose minimum
    // statistic is positive.
    std::size_t lo = 0;
    while (lo < coeffs.size() && coeffs[lo] == 0) ++lo;
    std::size_t m = coeffs.size();  // trailing zeros already trimmed
    for (std::size_t i = lo; i < lo + (m - lo) / 2; ++i)
        if (coeffs[i] != coeffs[m - 1 - (i - lo)]) return false;
    return true;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> c(std::max(coeffs.size(), o.coeffs.size()), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) c[i] += o.coeffs[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (coeffs.empty() || o.coeffs.empty()) return IntPolynomial();
    std::vector<BigInt> c(coeffs.size() + o.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs.size(); ++j)
            c[i + j] += coeffs[i] * o.coeffs[j];
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (d == 0 || coeffs[d] != 1) out << coeffs[d].str();
        if (d >= 1) {
            if (coeffs[d] != 1) out << "*";
            out << "t";
            if (d >= 2) out << "^" << d;
        }
    }
    return out.str();
}

}  // namespace nonnest
