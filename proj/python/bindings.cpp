// Python bindings for the main operations: counting, enumeration, descent
// statistics, catalog verification, and the certified bijections.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nonnest/bijections.hpp"
#include "nonnest/catalog.hpp"
#include "nonnest/enumerate.hpp"
#include "nonnest/stats.hpp"

namespace py = pybind11;
using namespace nonnest;

namespace {

py::object to_pyint(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

py::list to_pyints(const std::vector<BigInt>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_pyint(v));
    return out;
}

py::list poly_coeffs(const IntPolynomial& p) { return to_pyints(p.coeffs); }

py::dict report_dict(const VerificationReport& r) {
    py::dict d;
    d["patterns"] = format_pattern_set(r.entry->key);
    d["anchor"] = r.entry->anchor;
    d["oeis"] = r.entry->oeis;
    d["status"] = r.entry->conjectured ? "conjectured" : "proven";
    d["all_match"] = r.all_match;
    py::list rows;
    for (const auto& row : r.rows) {
        py::dict rd;
        rd["n"] = row.n;
        rd["predicted"] = to_pyint(row.predicted);
        rd["observed"] = to_pyint(row.observed);
        rd["match"] = row.match;
        rows.append(rd);
    }
    d["rows"] = rows;
    return d;
}

}  // namespace

PYBIND11_MODULE(_nonnesting, m) {
    m.doc() = "exact enumeration of pattern-avoiding nonnesting permutations";

    // word-level operations
    m.def("parse_word", &parse_word, py::arg("text"));
    m.def("format_word", &format_word, py::arg("word"));
    m.def("standardize", &standardize, py::arg("word"));
    m.def("reverse", &reversed, py::arg("word"));
    m.def("complement", &complemented, py::arg("word"));
    m.def("reverse_complement", &reverse_complemented, py::arg("word"));
    m.def("descent_count", &descent_count, py::arg("word"));
    m.def("contains_pattern", &contains_pattern, py::arg("word"), py::arg("pattern"));
    m.def(
        "avoids_all",
        [](const Word& w, const std::string& patterns) {
            return avoids_all(w, parse_pattern_set(patterns));
        },
        py::arg("word"), py::arg("patterns"));
    m.def("is_nonnesting", &is_nonnesting, py::arg("word"));
    m.def(
        "underlying_permutation",
        [](const Word& w) { return underlying_permutation(NonnestingPermutation::from_word(w)); },
        py::arg("word"));
    m.def(
        "symmetry_orbit",
        [](const std::string& patterns) {
            std::vector<std::string> out;
            for (const auto& image : symmetry_orbit(parse_pattern_set(patterns)))
                out.push_back(format_pattern_set(image));
            return out;
        },
        py::arg("patterns"));

    // enumeration and counting
    m.def(
        "count_nonnesting",
        [](int n, int workers) { return to_pyint(count_avoiders(n, PatternSet{}, workers)); },
        py::arg("n"), py::arg("workers") = 1);
    m.def(
        "count_avoiders",
        [](int n, const std::string& patterns, int workers) {
            return to_pyint(count_avoiders(n, parse_pattern_set(patterns), workers));
        },
        py::arg("n"), py::arg("patterns"), py::arg("workers") = 1);
    m.def(
        "generate_avoiders",
        [](int n, const std::string& patterns) {
            std::vector<Word> out;
            for_each_avoider(n, parse_pattern_set(patterns),
                             [&](const Word& w) { out.push_back(w); });
            return out;
        },
        py::arg("n"), py::arg("patterns") = std::string{});
    m.def(
        "count_sn_avoiders",
        [](int n, const std::string& patterns) {
            return to_pyint(count_sn_avoiders(n, parse_pattern_set(patterns)));
        },
        py::arg("n"), py::arg("patterns"));
    m.def(
        "sequence",
        [](const std::string& patterns, int n_max, int workers) {
            return to_pyints(sequence(parse_pattern_set(patterns), n_max, workers));
        },
        py::arg("patterns"), py::arg("n_max"), py::arg("workers") = 1);

    // descent statistics
    m.def(
        "descent_polynomial",
        [](int n, const std::string& patterns) {
            return poly_coeffs(descent_polynomial(n, parse_pattern_set(patterns)));
        },
        py::arg("n"), py::arg("patterns") = std::string{});
    m.def(
        "sn_descent_polynomial",
        [](int n, const std::string& patterns) {
            return poly_coeffs(sn_descent_polynomial(n, parse_pattern_set(patterns)));
        },
        py::arg("n"), py::arg("patterns") = std::string{});
    m.def("narayana", [](int n) { return poly_coeffs(narayana(n)); }, py::arg("n"));
    m.def(
        "check_factorization",
        [](int n, const std::string& sigma) {
            auto r = check_factorization(n, parse_pattern_set(sigma));
            py::dict d;
            d["holds"] = r.holds;
            d["lhs"] = poly_coeffs(r.lhs);
            d["rhs"] = poly_coeffs(r.rhs);
            return d;
        },
        py::arg("n"), py::arg("sigma") = std::string{});

    // bijections
    m.def(
        "to_dyck", [](const Word& w) { return to_dyck(NonnestingPermutation::from_word(w)); },
        py::arg("word"));
    m.def(
        "dyck_encode",
        [](const Word& w) { return encode_1132_2213_2231(NonnestingPermutation::from_word(w)); },
        py::arg("word"),
        "encode an element of C_n(1132,2213,2231) as a Dyck word of semilength n+1");
    m.def(
        "dyck_decode", [](const DyckWord& w) { return decode_1132_2213_2231(w).word; },
        py::arg("dyck_word"));
    m.def(
        "grand_dyck_encode",
        [](const Word& w) {
            GrandDyckCode c = encode_1322_2231(NonnestingPermutation::from_word(w));
            py::dict d;
            switch (c.kind) {
                case GrandDyckCode::Kind::kNoOuter: d["case"] = "no-outer"; break;
                case GrandDyckCode::Kind::kEndsDD: d["case"] = "ends-dd"; break;
                case GrandDyckCode::Kind::kEndsUU: d["case"] = "ends-uu"; break;
            }
            d["steps"] = c.steps;
            d["subset"] = std::vector<int>(c.subset.begin(), c.subset.end());
            return d;
        },
        py::arg("word"), "injective encoding of an element of C_n(1322,2231)");
    m.def(
        "duplicate", [](const Word& perm) { return duplicate(perm).word; }, py::arg("perm"));
    m.def(
        "undup", [](const Word& w) { return undup(NonnestingPermutation::from_word(w)); },
        py::arg("word"));

    // catalog
    m.def("catalog", [] {
        py::list out;
        for (const auto& e : builtin_catalog()) {
            py::dict d;
            py::list pats;
            for (const auto& p : e.key.patterns) pats.append(format_word_compact(p));
            d["patterns"] = pats;
            d["valid_from"] = e.valid_from;
            d["oeis"] = e.oeis;
            d["anchor"] = e.anchor;
            d["status"] = e.conjectured ? "conjectured" : "proven";
            out.append(d);
        }
        return out;
    });
    m.def(
        "catalog_evaluate",
        [](const std::string& patterns, int n) {
            PatternSet key = parse_pattern_set(patterns);
            for (const auto& e : builtin_catalog())
                if (e.key == key) return to_pyint(evaluate(e, n).value);
            throw std::invalid_argument("no catalog entry for " + patterns);
        },
        py::arg("patterns"), py::arg("n"));
    m.def(
        "verify_catalog",
        [](int n_max, const std::string& filter, int workers) {
            py::list entries;
            bool all_proven = true;
            for (const auto& e : builtin_catalog()) {
                if (!filter.empty() && e.anchor.find(filter) == std::string::npos &&
                    e.oeis.find(filter) == std::string::npos)
                    continue;
                auto r = verify(e, n_max, 24, workers);
                if (!r.all_match && !e.conjectured) all_proven = false;
                entries.append(report_dict(r));
            }
            py::dict d;
            d["all_proven_match"] = all_proven;
            d["entries"] = entries;
            return d;
        },
        py::arg("n_max"), py::arg("filter") = std::string{}, py::arg("workers") = 1);

    m.attr("__version__") = "0.1.0";
}
