#pragma once

#include <map>
#include <utility>
#include <vector>

#include "segring/ring.hpp"

namespace segring {

/// m*(delta([a..b])) = sum over cut points of (upper part) (x) (lower part):
/// for a (k+1)-point segment, the k+2 terms
/// delta([a+i+1..b]) (x) delta([a..a+i]), i = -1..k, each with coefficient 1.
/// Empty pieces render as 1.
inline TensorElem mstar_segment(const Segment& seg) {
    TensorElem out(2);
    const long long k = seg.num_points() - 1;
    for (long long i = -1; i <= k; ++i) {
        Multisegment upper, lower;
        if (i < k) upper = Multisegment({Segment(seg.line, seg.start + (i + 1), seg.end)});
        if (i >= 0) lower = Multisegment({Segment(seg.line, seg.start, seg.start + i)});
        out.add_term({upper, lower}, 1);
    }
    return out;
}

/// Comultiplication on R. On a basis label it is the componentwise product of
/// the per-segment expansions; extended linearly. m*(1) = 1 (x) 1.
inline TensorElem mstar(const RElem& x) {
    TensorElem out(2);
    for (const auto& [label, c] : x.terms()) {
        TensorElem term(2);
        term.add_term({Multisegment(), Multisegment()}, c);
        for (const Segment& seg : label.entries()) term = term * mstar_segment(seg);
        out += term;
    }
    return out;
}

namespace detail {

/// Replaces the component at `slot` of every tuple by its m* expansion,
/// raising the arity by one.
inline TensorElem expand_component(const TensorElem& t, int slot) {
    TensorElem out(t.arity() + 1);
    for (const auto& [tuple, c] : t.terms()) {
        TensorElem split = mstar(RElem::basis(tuple[static_cast<std::size_t>(slot)]));
        for (const auto& [pair, k] : split.terms()) {
            TensorElem::Tuple next;
            next.reserve(tuple.size() + 1);
            for (int i = 0; i < slot; ++i) next.push_back(tuple[static_cast<std::size_t>(i)]);
            next.push_back(pair[0]);
            next.push_back(pair[1]);
            for (std::size_t i = static_cast<std::size_t>(slot) + 1; i < tuple.size(); ++i)
                next.push_back(tuple[i]);
            out.add_term(std::move(next), c * k);
        }
    }
    return out;
}

}  // namespace detail

/// Iterated comultiplication to arity r, splitting the rightmost factor at
/// each step. Coassociativity makes the bracketing observationally
/// irrelevant; the harness enforces that rather than assuming it.
inline TensorElem comult_iterate(const RElem& x, int r) {
    if (r < 1) throw DomainError("comult_iterate requires arity >= 1");
    TensorElem out = TensorElem::from_relem(x);
    while (out.arity() < r) out = detail::expand_component(out, out.arity() - 1);
    return out;
}

/// Same arity-r expansion but always splitting the leftmost factor; used as
/// the opposite bracketing in coassociativity checks.
inline TensorElem comult_iterate_left(const RElem& x, int r) {
    if (r < 1) throw DomainError("comult_iterate requires arity >= 1");
    TensorElem out = TensorElem::from_relem(x);
    while (out.arity() < r) out = detail::expand_component(out, 0);
    return out;
}

/// Shuffle product of two words: the sum of all interleavings preserving the
/// internal order of each factor.
inline WordSum shuffle(const Word& a, const Word& b) {
    WordSum out;
    auto recurse = [&](auto&& self, std::size_t ia, std::size_t ib, Word& acc) -> void {
        if (ia == a.size() && ib == b.size()) {
            out.add_term(acc, 1);
            return;
        }
        if (ia < a.size()) {
            acc.push_back(a[ia]);
            self(self, ia + 1, ib, acc);
            acc.pop_back();
        }
        if (ib < b.size()) {
            acc.push_back(b[ib]);
            self(self, ia, ib + 1, acc);
            acc.pop_back();
        }
    };
    Word acc;
    acc.reserve(a.size() + b.size());
    recurse(recurse, 0, 0, acc);
    return out;
}

inline WordSum shuffle(const WordSum& a, const WordSum& b) {
    WordSum out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            WordSum mix = shuffle(wa, wb);
            for (const auto& [w, c] : mix.terms()) out.add_term(w, ca * cb * c);
        }
    return out;
}

/// The descending word of a segment: top point first, as in the minimal
/// Jacquet module of delta(Delta).
inline Word descending_word(const Segment& seg) { return points_descending(seg); }

/// Minimal (cuspidal-level) Jacquet module. Each segment contributes its
/// descending word; a product of segments contributes the shuffle product of
/// their words; extended linearly.
inline WordSum cuspidal_jacquet(const RElem& x) {
    WordSum out;
    for (const auto& [label, c] : x.terms()) {
        WordSum words = WordSum::single(Word{});
        for (const Segment& seg : label.entries())
            words = shuffle(words, WordSum::single(descending_word(seg)));
        for (const auto& [w, k] : words.terms()) out.add_term(w, c * k);
    }
    return out;
}

namespace detail {

/// Cuspidal words of a basis label by iterating m*: peel the top point as the
/// single-point left factor of m*, recurse on the remainder. Earlier factors
/// are never revisited, so this equals the full arity-d expansion restricted
/// to all-cuspidal tuples. Never touches the shuffle path.
inline const WordSum& iterated_words(const Multisegment& label,
                                     std::map<Multisegment, WordSum>& memo) {
    auto it = memo.find(label);
    if (it != memo.end()) return it->second;
    WordSum result;
    if (label.empty()) {
        result.add_term(Word{}, 1);
    } else {
        TensorElem split = mstar(RElem::basis(label));
        for (const auto& [pair, c] : split.terms()) {
            if (!is_cuspidal_point_label(pair[0])) continue;
            Point top = first_point(pair[0].entries().front());
            const WordSum& rest = iterated_words(pair[1], memo);
            for (const auto& [w, k] : rest.terms()) {
                Word word;
                word.reserve(w.size() + 1);
                word.push_back(top);
                word.insert(word.end(), w.begin(), w.end());
                result.add_term(std::move(word), c * k);
            }
        }
    }
    return memo.emplace(label, std::move(result)).first->second;
}

}  // namespace detail

/// Independent route to the cuspidal Jacquet module via iterated m*; the
/// harness compares it against the shuffle expansion.
inline WordSum cuspidal_jacquet_iterated(const RElem& x) {
    std::map<Multisegment, WordSum> memo;
    WordSum out;
    for (const auto& [label, c] : x.terms()) {
        const WordSum& words = detail::iterated_words(label, memo);
        for (const auto& [w, k] : words.terms()) out.add_term(w, c * k);
    }
    return out;
}

/// Which terms of a tensor expansion to keep.
struct FilterSpec {
    enum class Kind { bottom, left_equals, right_equals, supp_profile };

    Kind kind = Kind::bottom;
    Multisegment label;                  // left_equals / right_equals
    std::vector<PointMultiset> profile;  // supp_profile, one multiset per factor

    static FilterSpec bottom() { return FilterSpec{}; }
    static FilterSpec left_equals(Multisegment m) {
        return FilterSpec{Kind::left_equals, std::move(m), {}};
    }
    static FilterSpec right_equals(Multisegment m) {
        return FilterSpec{Kind::right_equals, std::move(m), {}};
    }
    static FilterSpec supp_profile(std::vector<PointMultiset> sets) {
        return FilterSpec{Kind::supp_profile, Multisegment(), std::move(sets)};
    }
};

/// Keeps the tensor terms selected by the spec; coefficients are preserved.
/// bottom keeps terms whose right factor is a single cuspidal point;
/// left/right-equals match the given label exactly; supp-profile matches the
/// componentwise cuspidal supports exactly, with multiplicity.
inline TensorElem filter(const TensorElem& t, const FilterSpec& spec) {
    switch (spec.kind) {
        case FilterSpec::Kind::bottom:
        case FilterSpec::Kind::left_equals:
        case FilterSpec::Kind::right_equals:
            if (t.arity() != 2) throw DomainError("filter requires an arity-2 tensor element");
            break;
        case FilterSpec::Kind::supp_profile:
            if (t.arity() != static_cast<int>(spec.profile.size()))
                throw DomainError("supp-profile arity does not match tensor arity");
            break;
    }
    TensorElem out(t.arity());
    for (const auto& [tuple, c] : t.terms()) {
        bool keep = false;
        switch (spec.kind) {
            case FilterSpec::Kind::bottom:
                keep = is_cuspidal_point_label(tuple[1]);
                break;
            case FilterSpec::Kind::left_equals:
                keep = tuple[0] == spec.label;
                break;
            case FilterSpec::Kind::right_equals:
                keep = tuple[1] == spec.label;
                break;
            case FilterSpec::Kind::supp_profile:
                keep = true;
                for (std::size_t i = 0; i < tuple.size() && keep; ++i)
                    keep = supp(tuple[i]) == spec.profile[i];
                break;
        }
        if (keep) out.add_term(tuple, c);
    }
    return out;
}

/// Filters an element of R after expanding it to the arity the spec needs:
/// m* for the arity-2 kinds, iterated m* for a supp profile.
inline TensorElem filter(const RElem& x, const FilterSpec& spec) {
    if (spec.kind == FilterSpec::Kind::supp_profile)
        return filter(comult_iterate(x, static_cast<int>(spec.profile.size())), spec);
    return filter(mstar(x), spec);
}

/// m*_bottom: the terms of m*(x) with a single cuspidal point on the right.
inline TensorElem mstar_bottom(const RElem& x) { return filter(x, FilterSpec::bottom()); }

}  // namespace segring
