#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "segring/ring.hpp"

namespace segring {

inline std::string format_point(const LineTable& table, const Point& p) {
    return table[p.line].id + ":" + format_rational(p.e);
}

/// "d(rho,0,1)" — the form the expression grammar accepts.
inline std::string format_segment(const LineTable& table, const Segment& seg) {
    return "d(" + table[seg.line].id + "," + format_rational(seg.start) + "," +
           format_rational(seg.end) + ")";
}

/// Product of d() factors joined by " x "; the empty label prints as "1".
inline std::string format_multisegment(const LineTable& table, const Multisegment& m) {
    if (m.empty()) return "1";
    std::string out;
    for (const Segment& seg : m.entries()) {
        if (!out.empty()) out += " x ";
        out += format_segment(table, seg);
    }
    return out;
}

namespace detail {

/// Canonical term order for output: by degree, then lexicographically on the
/// sorted segment tuples.
inline std::vector<std::pair<Multisegment, long long>> ordered_terms(const LineTable& table,
                                                                     const RElem& x) {
    std::vector<std::pair<Multisegment, long long>> terms(x.terms().begin(), x.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        long long da = degree(table, a.first), db = degree(table, b.first);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    return terms;
}

inline std::vector<std::pair<TensorElem::Tuple, long long>> ordered_terms(const LineTable& table,
                                                                          const TensorElem& t) {
    std::vector<std::pair<TensorElem::Tuple, long long>> terms(t.terms().begin(),
                                                               t.terms().end());
    auto tuple_degrees = [&](const TensorElem::Tuple& tuple) {
        std::vector<long long> degs;
        degs.reserve(tuple.size());
        for (const Multisegment& m : tuple) degs.push_back(degree(table, m));
        return degs;
    };
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        auto da = tuple_degrees(a.first), db = tuple_degrees(b.first);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    return terms;
}

}  // namespace detail

/// Canonical one-line form, re-parseable under the expression grammar:
/// terms joined by " + ", coefficients printed unless 1, e.g.
/// "d(rho,0,0) x d(rho,1,1) + -1*d(rho,0,1)". Zero prints as "0*1".
inline std::string format_relem(const LineTable& table, const RElem& x) {
    if (x.is_zero()) return "0*1";
    std::string out;
    for (const auto& [label, c] : detail::ordered_terms(table, x)) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c) + "*";
        out += format_multisegment(table, label);
    }
    return out;
}

/// Tensor factors joined by " (x) ".
inline std::string format_tensor_tuple(const LineTable& table, const TensorElem::Tuple& tuple) {
    std::string out;
    for (const Multisegment& m : tuple) {
        if (!out.empty()) out += " (x) ";
        out += format_multisegment(table, m);
    }
    return out;
}

/// One term per line, "<coefficient> <tuple>", canonical order.
inline std::vector<std::string> format_tensor_lines(const LineTable& table, const TensorElem& t) {
    std::vector<std::string> lines;
    for (const auto& [tuple, c] : detail::ordered_terms(table, t))
        lines.push_back(std::to_string(c) + " " + format_tensor_tuple(table, tuple));
    return lines;
}

/// "(1,0,1)" with bare exponents when the configuration declares a single
/// line; "(rho:1,sigma:0)" otherwise.
inline std::string format_word(const LineTable& table, const Word& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += table.count() == 1 ? format_rational(w[i].e) : format_point(table, w[i]);
    }
    out += ")";
    return out;
}

/// One word per line, "<coefficient> <word>", canonical order.
inline std::vector<std::string> format_word_lines(const LineTable& table, const WordSum& s) {
    std::vector<std::string> lines;
    for (const auto& [w, c] : s.terms())
        lines.push_back(std::to_string(c) + " " + format_word(table, w));
    return lines;
}

inline std::string format_point_multiset(const LineTable& table, const PointMultiset& points) {
    std::string out;
    for (const auto& [p, mult] : points)
        for (long long i = 0; i < mult; ++i) {
            if (!out.empty()) out += ",";
            out += format_point(table, p);
        }
    return out;
}

}  // namespace segring
