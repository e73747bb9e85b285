#pragma once

#include "nonnest/bigint.hpp"
#include "nonnest/word.hpp"

#include <optional>
#include <map>
#include <string>
#include <vector>

namespace nonnest {

// Exact evaluator for one enumeration formula. Every kind produces a big
// integer for any n >= 1 (generating-function kinds extract the order-n
// coefficient through the series module).
struct FormulaDescriptor {
    enum class Kind {
        kConstantFrom,       // fixed value
        kZeroFrom,           // 0
        kFactorial,          // n!
        kPolynomialInN,      // sum coeffs[i] * n^i, rational coeffs, integer total
        kExponential,        // sum a_i * b_i^n + c
        kCatalanCombination, // term sum over factor products (see Factor)
        kFibonacciCombination,
        kOgfRational,        // numerator(x) / denominator(x)
        kOgfAlgebraic,       // (P(x) + q*sqrt(R(x))) / D(x)
        kEgf,                // n! [x^n] 2/(3 - e^{2x})
        kBinomialSum,        // sum_{k=0}^{n-1} prod binom(linear forms), optionally / n
    };

    struct Factor {
        // "catalan", "fibonacci", "factorial", "pow" use n+shift;
        // "binom-2n-n", "binom-2n-n-1", "binom-n-2" ignore it.
        std::string f;
        int shift = 0;
        int base = 0;  // pow only
    };
    struct Term {
        Rational coef;
        std::vector<Factor> factors;  // empty product = 1
    };
    struct ExpTerm {
        Rational coef;
        int base = 0;
    };
    struct LinearForm {
        // a*n + b*k + c
        long long a = 0, b = 0, c = 0;
    };

    Kind kind = Kind::kZeroFrom;
    Rational constant_value;              // kConstantFrom
    std::vector<Rational> poly_coeffs;    // kPolynomialInN
    std::vector<ExpTerm> exp_terms;       // kExponential
    Rational exp_constant;                // kExponential
    std::vector<Term> terms;              // k{Catalan,Fibonacci}Combination
    std::vector<Rational> ogf_numerator;  // kOgfRational
    std::vector<Rational> ogf_denominator;
    std::vector<Rational> alg_poly;       // kOgfAlgebraic: P
    Rational alg_sqrt_coef;               //               q
    std::vector<Rational> alg_radicand;   //               R
    std::vector<Rational> alg_denominator;//               D
    std::vector<std::pair<LinearForm, LinearForm>> sum_factors;  // kBinomialSum
    bool sum_divide_by_n = false;

    // Exact prediction for n >= 1. series_order bounds the truncation used
    // by generating-function kinds (raised to n automatically).
    BigInt evaluate(int n, int series_order = 24) const;
};

struct CatalogEntry {
    PatternSet key;          // the pattern set as stated, not canonicalized
    FormulaDescriptor formula;
    int valid_from = 1;      // formula holds for n >= valid_from
    std::map<int, BigInt> small_values;  // stated overrides below valid_from
    std::string oeis;        // empty when none
    std::string anchor;      // stable id, e.g. "thm-1322-2231"
    bool conjectured = false;
};

struct Prediction {
    BigInt value;
    bool oracle_filled = false;  // below valid_from with no stated value
};

// Exact predicted c_n(key); below valid_from, stated small values are used
// and anything else is filled by brute-force enumeration.
Prediction evaluate(const CatalogEntry& entry, int n, int series_order = 24);

struct VerificationRow {
    int n = 0;
    BigInt predicted;
    BigInt observed;
    bool match = false;
};

struct VerificationReport {
    const CatalogEntry* entry = nullptr;
    std::vector<VerificationRow> rows;  // n = max(1, valid_from) .. n_max
    bool all_match = true;
};

VerificationReport verify(const CatalogEntry& entry, int n_max,
                          int series_order = 24, int workers = 1);

// (c_n(ps))_{n=1..n_max} by enumeration.
std::vector<BigInt> sequence(const PatternSet& ps, int n_max, int workers = 1);

// Every table row, parsed from the catalog JSON document. One entry per
// pattern set; rows sharing a formula expand to one entry each.
const std::vector<CatalogEntry>& builtin_catalog();

// Parses a catalog from JSON text (see data/catalog.json for the schema).
std::vector<CatalogEntry> parse_catalog_json(const std::string& json_text);

// Contents of the shipped catalog document.
const std::string& builtin_catalog_json();

}  // namespace nonnest
