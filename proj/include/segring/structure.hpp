#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "segring/criteria.hpp"
#include "segring/hopf.hpp"

namespace segring {

/// Decision for a product of two essentially square-integrable classes.
/// When the pair is linked the product has length two and
/// langlands_class + class(other_summand) = class({D1, D2}).
struct PairDecision {
    enum class Status { irreducible, length_two };

    Status status = Status::irreducible;
    Multisegment class_label;                  // {D1, D2}
    RElem langlands_class;                     // L(D1, D2) as a class; zero if irreducible
    std::optional<Multisegment> other_summand; // {D1 u D2, D1 n D2}, intersection dropped if empty
};

/// Irreducible unless the segments are linked; for a linked pair returns the
/// two-summand decomposition of the product class.
inline PairDecision decide_pair(const Segment& d1, const Segment& d2) {
    PairDecision decision;
    decision.class_label = Multisegment({d1, d2});
    if (!linked(d1, d2)) return decision;

    decision.status = PairDecision::Status::length_two;
    std::vector<Segment> summand{*union_segments(d1, d2)};
    if (auto common = intersect_segments(d1, d2)) summand.push_back(*common);
    decision.other_summand = Multisegment(std::move(summand));
    decision.langlands_class =
        RElem::basis(decision.class_label) - RElem::basis(*decision.other_summand);
    return decision;
}

/// The class of the non-delta subquotient of p x (p+1):
/// {[p..p], [p+1..p+1]} - {[p..p+1]}.
inline RElem zelevinsky_class(const Point& p) {
    Segment low(p.line, p.e, p.e);
    Segment high(p.line, p.e + 1, p.e + 1);
    Segment pair(p.line, p.e, p.e + 1);
    return RElem::basis(Multisegment({low, high})) - RElem::basis(Multisegment({pair}));
}

/// The label of a product of unitary delta's, irreducible as a class.
inline Multisegment tempered_product_class(const LineTable& table,
                                           const std::vector<Segment>& segments) {
    for (const Segment& seg : segments)
        if (!is_unitary(table, seg))
            throw DomainError("tempered_product_class: non-unitary segment");
    return Multisegment(segments);
}

/// The label of a product of pairwise-non-linked delta's, irreducible as a
/// class. No claim is made for families with a linked pair.
inline Multisegment nonlinked_product_class(const std::vector<Segment>& segments) {
    for (std::size_t i = 0; i < segments.size(); ++i)
        for (std::size_t j = i + 1; j < segments.size(); ++j)
            if (linked(segments[i], segments[j]))
                throw DomainError("nonlinked_product_class: segments are linked");
    return Multisegment(segments);
}

struct SIClassification {
    std::optional<Segment> segment;
    // Set when X is the point set of some segment, but not a self-dual one.
    bool essentially_only = false;
};

/// A point multiset is the cuspidal support of a square-integrable class iff
/// it is exactly the point set of a repetition-free segment Delta with
/// dual(Delta) = Delta.
inline SIClassification classify_square_integrable(const LineTable& table,
                                                   const PointMultiset& points) {
    if (points.empty()) throw DomainError("classify_square_integrable: empty multiset");
    SIClassification result;
    const LineId line = points.begin()->first.line;
    for (const auto& [p, mult] : points)
        if (p.line != line || mult != 1) return result;

    const Rational lo = points.begin()->first.e;
    const Rational hi = std::prev(points.end())->first.e;
    if (!is_integer(hi - lo)) return result;
    Segment candidate(line, lo, hi);
    if (candidate.num_points() != static_cast<long long>(points.size())) return result;
    for (const Point& p : points_ascending(candidate))
        if (!points.count(p)) return result;

    if (dual(table, candidate) != candidate) {
        result.essentially_only = true;
        return result;
    }
    result.segment = candidate;
    return result;
}

}  // namespace segring
