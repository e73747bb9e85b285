#include "nonnest/catalog.hpp"

#include "nonnest/enumerate.hpp"
#include "nonnest/series.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace nonnest {

namespace {

using nlohmann::json;

BigInt factor_value(const FormulaDescriptor::Factor& f, int n) {
    if (f.f == "catalan") return catalan(n + f.shift);
    if (f.f == "fibonacci") return fibonacci(n + f.shift);
    if (f.f == "factorial") return factorial(n + f.shift);
    if (f.f == "pow") return int_pow(f.base, n + f.shift);
    if (f.f == "binom-2n-n") return binomial(2 * BigInt(n), n);
    if (f.f == "binom-2n-n-1") return binomial(2 * BigInt(n), n - 1);
    if (f.f == "binom-n-2") return binomial(n, 2);
    throw std::invalid_argument("unknown formula factor: " + f.f);
}

BigInt term_sum(const std::vector<FormulaDescriptor::Term>& terms, int n) {
    Rational total = 0;
    for (const auto& t : terms) {
        Rational prod = t.coef;
        for (const auto& f : t.factors) prod *= Rational(factor_value(f, n));
        total += prod;
    }
    return rational_to_integer(total);
}

BigInt ogf_rational_coeff(const FormulaDescriptor& f, int n, int series_order) {
    int ord = std::max(n, series_order);
    Series num = Series::polynomial(f.ogf_numerator, ord);
    Series den = Series::polynomial(f.ogf_denominator, ord);
    return rational_to_integer(div(num, den).coeff(n));
}

BigInt ogf_algebraic_coeff(const FormulaDescriptor& f, int n, int series_order) {
    int val = 0;  // valuation of the denominator
    while (val < static_cast<int>(f.alg_denominator.size()) && f.alg_denominator[val] == 0)
        ++val;
    if (val == static_cast<int>(f.alg_denominator.size()))
        throw std::domain_error("algebraic OGF has zero denominator");
    int ord = std::max(n, series_order) + val;
    Series num = add(Series::polynomial(f.alg_poly, ord),
                     mul(Series::constant(f.alg_sqrt_coef, ord),
                         sqrt_series(Series::polynomial(f.alg_radicand, ord))));
    Series den = Series::polynomial(f.alg_denominator, ord);
    return rational_to_integer(div(num.shift_down(val), den.shift_down(val)).coeff(n));
}

long long linear_form(const FormulaDescriptor::LinearForm& lf, int n, long long k) {
    return lf.a * n + lf.b * k + lf.c;
}

BigInt binomial_sum_value(const FormulaDescriptor& f, int n) {
    BigInt total = 0;
    for (long long k = 0; k < n; ++k) {
        BigInt prod = 1;
        for (const auto& [top, bottom] : f.sum_factors)
            prod *= binomial(linear_form(top, n, k), linear_form(bottom, n, k));
        total += prod;
    }
    if (f.sum_divide_by_n) {
        if (total % n != 0) throw std::domain_error("binomial sum not divisible by n");
        total /= n;
    }
    return total;
}

}  // namespace

BigInt FormulaDescriptor::evaluate(int n, int series_order) const {
    switch (kind) {
        case Kind::kConstantFrom:
            return rational_to_integer(constant_value);
        case Kind::kZeroFrom:
            return 0;
        case Kind::kFactorial:
            return factorial(n);
        case Kind::kPolynomialInN: {
            Rational total = 0, power = 1;
            for (const Rational& c : poly_coeffs) {
                total += c * power;
                power *= n;
            }
            return rational_to_integer(total);
        }
        case Kind::kExponential: {
            Rational total = exp_constant;
            for (const auto& t : exp_terms) total += t.coef * Rational(int_pow(t.base, n));
            return rational_to_integer(total);
        }
        case Kind::kCatalanCombination:
        case Kind::kFibonacciCombination:
            return term_sum(terms, n);
        case Kind::kOgfRational:
            return ogf_rational_coeff(*this, n, series_order);
        case Kind::kOgfAlgebraic:
            return ogf_algebraic_coeff(*this, n, series_order);
        case Kind::kEgf:
            return egf_coefficients_geometric_exp(n).back();
        case Kind::kBinomialSum:
            return binomial_sum_value(*this, n);
    }
    throw std::logic_error("unhandled formula kind");
}

Prediction evaluate(const CatalogEntry& entry, int n, int series_order) {
    if (n < 1) throw std::invalid_argument("catalog evaluate: n >= 1 required");
    if (n >= entry.valid_from)
        return {entry.formula.evaluate(n, series_order), false};
    auto it = entry.small_values.find(n);
    if (it != entry.small_values.end()) return {it->second, false};
    return {count_avoiders(n, entry.key), true};
}

VerificationReport verify(const CatalogEntry& entry, int n_max, int series_order,
                          int workers) {
    VerificationReport report;
    report.entry = &entry;
    for (int n = std::max(1, entry.valid_from); n <= n_max; ++n) {
        VerificationRow row;
        row.n = n;
        row.predicted = evaluate(entry, n, series_order).value;
        row.observed = count_avoiders(n, entry.key, workers);
        row.match = row.predicted == row.observed;
        report.all_match = report.all_match && row.match;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<BigInt> sequence(const PatternSet& ps, int n_max, int workers) {
    std::vector<BigInt> out;
    out.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) out.push_back(count_avoiders(n, ps, workers));
    return out;
}

namespace {

Rational rat(const json& j) { return parse_rational(j.get<std::string>()); }

std::vector<Rational> rat_list(const json& j) {
    std::vector<Rational> out;
    for (const auto& v : j) out.push_back(rat(v));
    return out;
}

FormulaDescriptor parse_formula(const json& j) {
    FormulaDescriptor f;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant-from") {
        f.kind = FormulaDescriptor::Kind::kConstantFrom;
        f.constant_value = rat(j.at("value"));
    } else if (kind == "zero-from") {
        f.kind = FormulaDescriptor::Kind::kZeroFrom;
    } else if (kind == "factorial") {
        f.kind = FormulaDescriptor::Kind::kFactorial;
    } else if (kind == "polynomial-in-n") {
        f.kind = FormulaDescriptor::Kind::kPolynomialInN;
        f.poly_coeffs = rat_list(j.at("coeffs"));
    } else if (kind == "exponential") {
        f.kind = FormulaDescriptor::Kind::kExponential;
        for (const auto& t : j.at("terms"))
            f.exp_terms.push_back({rat(t.at("coef")), t.at("base").get<int>()});
        f.exp_constant = j.contains("constant") ? rat(j.at("constant")) : Rational(0);
    } else if (kind == "catalan-combination" || kind == "fibonacci-combination") {
        f.kind = kind == "catalan-combination" ? FormulaDescriptor::Kind::kCatalanCombination
                                               : FormulaDescriptor::Kind::kFibonacciCombination;
        for (const auto& t : j.at("terms")) {
            FormulaDescriptor::Term term;
            term.coef = rat(t.at("coef"));
            for (const auto& fac : t.at("factors")) {
                FormulaDescriptor::Factor factor;
                factor.f = fac.at("f").get<std::string>();
                factor.shift = fac.value("shift", 0);
                factor.base = fac.value("base", 0);
                term.factors.push_back(std::move(factor));
            }
            f.terms.push_back(std::move(term));
        }
    } else if (kind == "ogf-rational") {
        f.kind = FormulaDescriptor::Kind::kOgfRational;
        f.ogf_numerator = rat_list(j.at("numerator"));
        f.ogf_denominator = rat_list(j.at("denominator"));
    } else if (kind == "ogf-algebraic") {
        f.kind = FormulaDescriptor::Kind::kOgfAlgebraic;
        f.alg_poly = rat_list(j.at("poly"));
        f.alg_sqrt_coef = rat(j.at("sqrtCoef"));
        f.alg_radicand = rat_list(j.at("radicand"));
        f.alg_denominator = rat_list(j.at("denominator"));
    } else if (kind == "egf") {
        f.kind = FormulaDescriptor::Kind::kEgf;
    } else if (kind == "binomial-sum") {
        f.kind = FormulaDescriptor::Kind::kBinomialSum;
        f.sum_divide_by_n = j.value("divideByN", false);
        for (const auto& fac : j.at("factors")) {
            auto form = [](const json& arr) {
                FormulaDescriptor::LinearForm lf;
                lf.a = arr.at(0).get<long long>();
                lf.b = arr.at(1).get<long long>();
                lf.c = arr.at(2).get<long long>();
                return lf;
            };
            f.sum_factors.emplace_back(form(fac.at("top")), form(fac.at("bottom")));
        }
    } else {
        throw std::invalid_argument("unknown formula kind: " + kind);
    }
    return f;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog_json(const std::string& json_text) {
    json doc = json::parse(json_text);
    const json& list = doc.is_array() ? doc : doc.at("entries");
    std::vector<CatalogEntry> entries;
    for (const auto& j : list) {
        CatalogEntry e;
        std::vector<Word> patterns;
        for (const auto& p : j.at("patterns"))
            patterns.push_back(parse_word(p.get<std::string>()));
        e.key = PatternSet(std::move(patterns));
        e.formula = parse_formula(j.at("formula"));
        e.valid_from = j.value("validFrom", 1);
        if (j.contains("smallValues"))
            for (const auto& [k, v] : j.at("smallValues").items())
                e.small_values[std::stoi(k)] = BigInt(v.get<std::string>());
        e.oeis = j.value("oeis", std::string{});
        e.anchor = j.at("anchor").get<std::string>();
        e.conjectured = j.at("status").get<std::string>() == "conjectured";
        entries.push_back(std::move(e));
    }
    return entries;
}

const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> entries = parse_catalog_json(builtin_catalog_json());
    return entries;
}

}  // namespace nonnest
