#include "nonnest/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace nonnest {

Series::Series(std::vector<Rational> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) throw std::invalid_argument("series needs a constant term");
}

Series Series::polynomial(const std::vector<Rational>& a, int order) {
    if (order < 0) throw std::invalid_argument("negative series order");
    std::vector<Rational> c(order + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(order); ++i)
        c[i] = a[i];
    return Series(std::move(c));
}

Series Series::constant(const Rational& value, int order) {
    return polynomial({value}, order);
}

const Rational& Series::coeff(int k) const {
    if (k < 0 || k > order()) throw std::out_of_range("series coefficient index");
    return coeffs[k];
}

Series Series::shift_down(int k) const {
    if (k < 0 || k > order()) throw std::invalid_argument("bad shift");
    for (int i = 0; i < k; ++i)
        if (coeffs[i] != 0)
            throw std::domain_error("shift_down would drop a nonzero coefficient");
    return Series(std::vector<Rational>(coeffs.begin() + k, coeffs.end()));
}

Series Series::truncated(int ord) const {
    if (ord >= order()) return *this;
    if (ord < 0) throw std::invalid_argument("negative series order");
    return Series(std::vector<Rational>(coeffs.begin(), coeffs.begin() + ord + 1));
}

namespace {
int common_order(const Series& a, const Series& b) {
    return std::min(a.order(), b.order());
}
}  // namespace

Series add(const Series& a, const Series& b) {
    int n = common_order(a, b);
    std::vector<Rational> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = a.coeffs[i] + b.coeffs[i];
    return Series(std::move(c));
}

Series sub(const Series& a, const Series& b) {
    int n = common_order(a, b);
    std::vector<Rational> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = a.coeffs[i] - b.coeffs[i];
    return Series(std::move(c));
}

Series mul(const Series& a, const Series& b) {
    int n = common_order(a, b);
    std::vector<Rational> c(n + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j)
            c[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return Series(std::move(c));
}

Series div(const Series& a, const Series& b) {
    if (b.coeffs[0] == 0)
        throw std::domain_error("series division by zero constant term");
    int n = common_order(a, b);
    std::vector<Rational> q(n + 1);
    for (int m = 0; m <= n; ++m) {
        Rational acc = a.coeffs[m];
        for (int i = 0; i < m; ++i) acc -= q[i] * b.coeffs[m - i];
        q[m] = acc / b.coeffs[0];
    }
    return Series(std::move(q));
}

Series sqrt_series(const Series& a) {
    if (a.coeffs[0] != 1)
        throw std::domain_error("series sqrt needs constant term 1");
    int n = a.order();
    std::vector<Rational> s(n + 1);
    s[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc = a.coeffs[m];
        for (int i = 1; i < m; ++i) acc -= s[i] * s[m - i];
        s[m] = acc / 2;
    }
    return Series(std::move(s));
}

std::vector<BigInt> egf_coefficients_geometric_exp(int order) {
    if (order < 0) throw std::invalid_argument("negative order");
    std::vector<BigInt> a(order + 1);
    a[0] = 1;
    // Pascal row reused for binom(n, k).
    std::vector<BigInt> binom_row{1};
    for (int n = 0; n < order; ++n) {
        BigInt conv = 0;
        for (int k = 0; k <= n; ++k) conv += binom_row[k] * a[k] * a[n - k];
        a[n + 1] = 3 * conv - 2 * a[n];
        binom_row.push_back(0);
        for (int k = n + 1; k >= 1; --k) binom_row[k] += binom_row[k - 1];
    }
    return a;
}

}  // namespace nonnest
