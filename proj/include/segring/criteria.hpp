#pragma once

#include <algorithm>
#include <vector>

#include "segring/ring.hpp"

namespace segring {

/// Outcome of the Casselman square-integrability test on one cuspidal word.
struct CasselmanVerdict {
    bool sum_zero = false;           // total weight vanishes
    bool partials_positive = false;  // every proper prefix sum strictly positive
    bool square_integrable = false;  // conjunction of the two above
    bool essentially = false;        // same test after subtracting the mean weight
    Rational raw_sum{0};             // sum of exponents, in nu_rho units
    Rational weighted_sum{0};        // sum of n * s * exponent
};

/// Evaluates the criterion on the word: weights w_i = n_i * s_i * a_i,
/// square integrable iff the total is zero and every proper prefix sum is
/// strictly positive (ties fail). `essentially` recenters by the mean weight.
inline CasselmanVerdict casselman(const LineTable& table, const Word& w) {
    if (w.empty()) throw DomainError("casselman: empty word");
    std::vector<Rational> weights;
    weights.reserve(w.size());
    CasselmanVerdict verdict;
    for (const Point& p : w) {
        weights.push_back(casselman_weight(table, p));
        verdict.raw_sum += p.e;
        verdict.weighted_sum += weights.back();
    }
    const auto k = static_cast<long long>(w.size());
    const Rational mean = verdict.weighted_sum / k;

    verdict.sum_zero = verdict.weighted_sum == 0;
    verdict.partials_positive = true;
    verdict.essentially = true;
    Rational prefix{0};
    for (std::size_t j = 0; j + 1 < weights.size(); ++j) {
        prefix += weights[j];
        if (prefix <= 0) verdict.partials_positive = false;
        if (prefix - mean * static_cast<long long>(j + 1) <= 0) verdict.essentially = false;
    }
    verdict.square_integrable = verdict.sum_zero && verdict.partials_positive;
    return verdict;
}

/// Two segments are linked when their union is a segment different from both.
/// Cross-line pairs are never linked.
inline bool linked(const Segment& a, const Segment& b) {
    if (a.line != b.line) return false;
    auto u = union_segments(a, b);
    return u && *u != a && *u != b;
}

/// The indexing condition: for every j < k, neither end of segments[j] lies
/// in segments[k].
inline bool satisfies_extraction_order(const std::vector<Segment>& segments) {
    for (std::size_t j = 0; j < segments.size(); ++j)
        for (std::size_t k = j + 1; k < segments.size(); ++k)
            if (contains_point(segments[k], first_point(segments[j])) ||
                contains_point(segments[k], last_point(segments[j])))
                return false;
    return true;
}

/// Orders pairwise-distinct unitary segments so the indexing condition holds:
/// longest first per line. If the input admits no valid ordering at all
/// (precondition violated), throws NoOrderingError.
inline std::vector<Segment> ordering_for_extraction(std::vector<Segment> segments) {
    std::stable_sort(segments.begin(), segments.end(), [](const Segment& a, const Segment& b) {
        return a.num_points() > b.num_points();
    });
    if (satisfies_extraction_order(segments)) return segments;
    // Degenerate inputs: fall back to an exhaustive search before giving up.
    std::sort(segments.begin(), segments.end());
    do {
        if (satisfies_extraction_order(segments)) return segments;
    } while (std::next_permutation(segments.begin(), segments.end()));
    throw NoOrderingError("no ordering satisfies the extraction condition");
}

}  // namespace segring
