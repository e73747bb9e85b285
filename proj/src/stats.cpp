#include "nonnest/stats.hpp"

#include "nonnest/enumerate.hpp"

#include <stdexcept>

namespace nonnest {

IntPolynomial narayana(int n) {
    if (n < 1) throw std::invalid_argument("narayana: n >= 1 required");
    std::vector<BigInt> c(n);
    for (int d = 0; d < n; ++d) {
        BigInt num = binomial(n, d) * binomial(n, d + 1);
        if (num % n != 0) throw std::logic_error("narayana coefficient not integral");
        c[d] = num / n;
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial sn_descent_polynomial(int n, const PatternSet& sigma) {
    std::vector<BigInt> c(n == 0 ? 1 : n, 0);
    for_each_sn_avoider(n, sigma, [&](const Word& w) { ++c[descent_count(w)]; });
    return IntPolynomial(std::move(c));
}

PatternSet doubled_middle_patterns(const PatternSet& sigma) {
    std::vector<Word> doubled;
    for (const Word& s : sigma.patterns) {
        if (s.size() != 3 || distinct_count(s) != 3)
            throw std::invalid_argument("expected 3-letter patterns with distinct entries");
        doubled.push_back(Word{s[0], s[1], s[1], s[2]});
    }
    return PatternSet(std::move(doubled));
}

FactorizationCheck check_factorization(int n, const PatternSet& sigma) {
    FactorizationCheck out;
    out.lhs = descent_polynomial(n, doubled_middle_patterns(sigma));
    out.rhs = narayana(n) * sn_descent_polynomial(n, sigma);
    out.holds = out.lhs == out.rhs;
    return out;
}

}  // namespace nonnest
