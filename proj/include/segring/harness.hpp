#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "segring/criteria.hpp"
#include "segring/format.hpp"
#include "segring/structure.hpp"

namespace segring {

/// A finite family of instances: segments on the given lines with endpoints
/// on the grid inside [lo, hi], at most max_segment_points points each,
/// combined into labels of at most max_factors segments. Enumeration order is
/// canonical: lines ascending, then start, then end; labels by size, then
/// lexicographically in segment order.
struct InstanceWindow {
    std::vector<LineId> lines;  // empty means every declared line
    Rational lo{-2};
    Rational hi{2};
    int max_segment_points = 3;
    int max_factors = 3;
    Rational grid{1, 2};
};

struct CheckFailure {
    std::string instance;
    std::string expected;
    std::string actual;
};

struct CheckReport {
    std::string check_id;
    long long instances_run = 0;
    std::vector<CheckFailure> failures;
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return failures.empty(); }
};

namespace detail {

class ReportBuilder {
public:
    explicit ReportBuilder(std::string check_id) : start_(std::chrono::steady_clock::now()) {
        report_.check_id = std::move(check_id);
    }

    void instance() { ++report_.instances_run; }

    void require(bool ok, const std::string& instance, const std::string& expected,
                 const std::string& actual) {
        if (!ok) report_.failures.push_back({instance, expected, actual});
    }

    CheckReport finish() {
        report_.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start_);
        return std::move(report_);
    }

private:
    CheckReport report_;
    std::chrono::steady_clock::time_point start_;
};

inline std::vector<LineId> window_lines(const LineTable& table, const InstanceWindow& w) {
    if (!w.lines.empty()) return w.lines;
    std::vector<LineId> lines;
    for (LineId id = 0; id < table.count(); ++id) lines.push_back(id);
    return lines;
}

}  // namespace detail

inline std::vector<Segment> enumerate_segments(const LineTable& table, const InstanceWindow& w) {
    if (w.grid <= 0) throw DomainError("window grid step must be positive");
    std::vector<Segment> segments;
    for (LineId line : detail::window_lines(table, w))
        for (Rational start = w.lo; start <= w.hi; start += w.grid)
            for (int pts = 1; pts <= w.max_segment_points; ++pts) {
                Rational end = start + (pts - 1);
                if (end > w.hi) break;
                segments.emplace_back(line, start, end);
            }
    return segments;
}

inline std::vector<Point> enumerate_grid_points(const LineTable& table, const InstanceWindow& w) {
    if (w.grid <= 0) throw DomainError("window grid step must be positive");
    std::vector<Point> points;
    for (LineId line : detail::window_lines(table, w))
        for (Rational e = w.lo; e <= w.hi; e += w.grid) points.push_back(Point{line, e});
    return points;
}

inline std::vector<Segment> enumerate_unitary_segments(const LineTable& table,
                                                       const InstanceWindow& w) {
    std::vector<Segment> unitary;
    for (const Segment& seg : enumerate_segments(table, w))
        if (is_unitary(table, seg)) unitary.push_back(seg);
    return unitary;
}

/// All multisets of window segments of size 0..max_factors; size-major, then
/// lexicographic in segment order.
inline std::vector<Multisegment> enumerate_labels(const LineTable& table,
                                                  const InstanceWindow& w) {
    const std::vector<Segment> segments = enumerate_segments(table, w);
    std::vector<Multisegment> labels{Multisegment()};
    for (int size = 1; size <= w.max_factors; ++size) {
        std::vector<Segment> stack;
        auto walk = [&](auto&& self, std::size_t from, int todo) -> void {
            if (todo == 0) {
                labels.emplace_back(stack);
                return;
            }
            for (std::size_t i = from; i < segments.size(); ++i) {
                stack.push_back(segments[i]);
                self(self, i, todo - 1);
                stack.pop_back();
            }
        };
        walk(walk, 0, size);
    }
    return labels;
}

/// All point multisets of size 1..max_size over the window grid.
inline std::vector<PointMultiset> enumerate_point_multisets(const LineTable& table,
                                                            const InstanceWindow& w,
                                                            int max_size) {
    const std::vector<Point> points = enumerate_grid_points(table, w);
    std::vector<PointMultiset> result;
    std::vector<Point> stack;
    for (int size = 1; size <= max_size; ++size) {
        auto walk = [&](auto&& self, std::size_t from, int todo) -> void {
            if (todo == 0) {
                PointMultiset ms;
                for (const Point& p : stack) ++ms[p];
                result.push_back(std::move(ms));
                return;
            }
            for (std::size_t i = from; i < points.size(); ++i) {
                stack.push_back(points[i]);
                self(self, i, todo - 1);
                stack.pop_back();
            }
        };
        walk(walk, 0, size);
    }
    return result;
}

/// (m* (x) id) m* = (id (x) m*) m* on every basis label in the window.
inline CheckReport check_coassociativity(const LineTable& table, const InstanceWindow& w) {
    detail::ReportBuilder builder("coassociativity");
    for (const Multisegment& label : enumerate_labels(table, w)) {
        builder.instance();
        RElem x = RElem::basis(label);
        builder.require(comult_iterate_left(x, 3) == comult_iterate(x, 3),
                        format_multisegment(table, label), "left iteration == right iteration",
                        "expansions differ");
    }
    return builder.finish();
}

/// Projecting either factor of m*(x) to degree 0 recovers x.
inline CheckReport check_counit(const LineTable& table, const InstanceWindow& w) {
    detail::ReportBuilder builder("counit");
    for (const Multisegment& label : enumerate_labels(table, w)) {
        builder.instance();
        RElem x = RElem::basis(label);
        TensorElem expansion = mstar(x);
        RElem left_unit, right_unit;
        for (const auto& [tuple, c] : expansion.terms()) {
            if (tuple[0].empty()) left_unit.add_term(tuple[1], c);
            if (tuple[1].empty()) right_unit.add_term(tuple[0], c);
        }
        builder.require(left_unit == x && right_unit == x, format_multisegment(table, label),
                        "both counit projections recover the label", "projection differs");
    }
    return builder.finish();
}

/// m*(x y) = m*(x) m*(y) for window label pairs whose product stays in the
/// window's factor bound.
inline CheckReport check_multiplicativity(const LineTable& table, const InstanceWindow& w) {
    detail::ReportBuilder builder("multiplicativity");
    const std::vector<Multisegment> labels = enumerate_labels(table, w);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i; j < labels.size(); ++j) {
            if (static_cast<int>(labels[i].size() + labels[j].size()) > w.max_factors) continue;
            builder.instance();
            RElem x = RElem::basis(labels[i]);
            RElem y = RElem::basis(labels[j]);
            builder.require(mstar(x * y) == mstar(x) * mstar(y),
                            format_multisegment(table, labels[i]) + "  |  " +
                                format_multisegment(table, labels[j]),
                            "m*(xy) == m*(x)m*(y)", "products differ");
        }
    return builder.finish();
}

/// m* of a basis label has all coefficients positive.
inline CheckReport check_positivity(const LineTable& table, const InstanceWindow& w) {
    detail::ReportBuilder builder("positivity");
    for (const Multisegment& label : enumerate_labels(table, w)) {
        builder.instance();
        builder.require(mstar(RElem::basis(label)).is_nonnegative(),
                        format_multisegment(table, label), "all m* coefficients positive",
                        "negative coefficient");
    }
    return builder.finish();
}

/// The shuffle expansion of the minimal Jacquet module agrees with iterating
/// m* down to cuspidal words.
inline CheckReport check_shuffle_equivalence(const LineTable& table, const InstanceWindow& w) {
    detail::ReportBuilder builder("shuffle");
    for (const Multisegment& label : enumerate_labels(table, w)) {
        builder.instance();
        RElem x = RElem::basis(label);
        builder.require(cuspidal_jacquet(x) == cuspidal_jacquet_iterated(x),
                        format_multisegment(table, label), "shuffle words == iterated m* words",
                        "word sums differ");
    }
    return builder.finish();
}

namespace detail {

/// Groups a multiset of segments into blocks of equal segments, ordered by
/// the extraction ordering of the distinct segments.
inline std::vector<std::pair<Segment, int>> extraction_blocks(std::vector<Segment> segments) {
    std::sort(segments.begin(), segments.end());
    std::vector<Segment> distinct;
    std::vector<int> multiplicity;
    for (const Segment& seg : segments) {
        if (!distinct.empty() && distinct.back() == seg) {
            ++multiplicity.back();
        } else {
            distinct.push_back(seg);
            multiplicity.push_back(1);
        }
    }
    std::vector<Segment> ordered = ordering_for_extraction(distinct);
    std::vector<std::pair<Segment, int>> blocks;
    for (const Segment& seg : ordered)
        for (std::size_t i = 0; i < distinct.size(); ++i)
            if (distinct[i] == seg) blocks.emplace_back(seg, multiplicity[i]);
    return blocks;
}

inline Multisegment repeated_label(const Segment& seg, int copies) {
    return Multisegment(std::vector<Segment>(static_cast<std::size_t>(copies), seg));
}

}  // namespace detail

/// Multiplicity-one extraction for a family of unitary segments
/// (distinct, or grouped into repeated blocks). Route one peels blocks off
/// with the left-equals filter; route two reads the coefficient of the block
/// tuple in the iterated expansion, restricted by the supp profile.
inline CheckReport check_multiplicity_one(const LineTable& table,
                                          const std::vector<Segment>& segments) {
    detail::ReportBuilder builder("multiplicity-one");
    if (segments.empty()) throw DomainError("check_multiplicity_one: empty family");
    for (const Segment& seg : segments)
        if (!is_unitary(table, seg))
            throw DomainError("check_multiplicity_one: non-unitary segment");

    builder.instance();
    const auto blocks = detail::extraction_blocks(segments);
    const Multisegment full_label = Multisegment(segments);
    std::string instance = format_multisegment(table, full_label);

    // Filter cascade.
    RElem remainder = RElem::basis(full_label);
    for (const auto& [seg, copies] : blocks) {
        Multisegment block = detail::repeated_label(seg, copies);
        TensorElem kept = filter(mstar(remainder), FilterSpec::left_equals(block));
        RElem next;
        for (const auto& [tuple, c] : kept.terms()) next.add_term(tuple[1], c);
        remainder = next;
    }
    builder.require(remainder == RElem::unit(), instance,
                    "cascade terminates with coefficient 1",
                    format_relem(table, remainder));

    // Brute force at full arity.
    const int arity = static_cast<int>(blocks.size());
    std::vector<PointMultiset> profile;
    TensorElem::Tuple block_tuple;
    for (const auto& [seg, copies] : blocks) {
        Multisegment block = detail::repeated_label(seg, copies);
        profile.push_back(supp(block));
        block_tuple.push_back(block);
    }
    TensorElem expansion = comult_iterate(RElem::basis(full_label), arity);
    TensorElem restricted = filter(expansion, FilterSpec::supp_profile(profile));
    long long coeff = restricted.coeff(block_tuple);
    builder.require(coeff == 1, instance, "tuple coefficient 1 in iterated expansion",
                    std::to_string(coeff));
    return builder.finish();
}

/// All families of at most max_factors unitary segments on one window line,
/// repetitions allowed (repeated blocks give the tempered-power variant).
inline CheckReport check_multiplicity_one_window(const LineTable& table,
                                                 const InstanceWindow& w) {
    detail::ReportBuilder builder("multiplicity-one");
    for (LineId line : detail::window_lines(table, w)) {
        InstanceWindow onto = w;
        onto.lines = {line};
        const std::vector<Segment> unitary = enumerate_unitary_segments(table, onto);
        std::vector<Segment> stack;
        auto walk = [&](auto&& self, std::size_t from, int todo) -> void {
            if (!stack.empty()) {
                CheckReport one = check_multiplicity_one(table, stack);
                builder.instance();
                for (const CheckFailure& f : one.failures)
                    builder.require(false, f.instance, f.expected, f.actual);
            }
            if (todo == 0) return;
            for (std::size_t i = from; i < unitary.size(); ++i) {
                stack.push_back(unitary[i]);
                self(self, i, todo - 1);
                stack.pop_back();
            }
        };
        walk(walk, 0, w.max_factors);
    }
    return builder.finish();
}

/// The Lambda equality: the supp-restricted arity-3 expansion of
/// delta(D_1) ... delta(D_k) collapses to the single term
/// (Gamma_1 ... Gamma_k) (x) Delta^k (x) (Gamma_1+ ... Gamma_k+).
inline CheckReport check_lambda_equality(const LineTable& table, const Segment& seg, int k) {
    detail::ReportBuilder builder("lambda");
    if (!is_unitary(table, seg)) throw DomainError("check_lambda_equality: segment not unitary");
    if (k < 1) throw DomainError("check_lambda_equality: k must be >= 1");

    builder.instance();
    const Rational a = seg.end;  // seg = [-a .. a]
    std::vector<Segment> upper_entries, lower_entries, outer_entries;
    PointMultiset upper_supp, middle_supp, lower_supp;
    for (int i = 1; i <= k; ++i) {
        Segment gamma(seg.line, a + 1, a + i);
        Segment gamma_dual = dual(table, gamma);
        upper_entries.push_back(gamma);
        lower_entries.push_back(gamma_dual);
        outer_entries.emplace_back(seg.line, -a - i, a + i);
        for (const Point& p : points_ascending(gamma)) ++upper_supp[p];
        for (const Point& p : points_ascending(gamma_dual)) ++lower_supp[p];
        for (const Point& p : points_ascending(seg)) ++middle_supp[p];
    }
    RElem product = RElem::basis(Multisegment(outer_entries));
    TensorElem restricted =
        filter(product, FilterSpec::supp_profile({upper_supp, middle_supp, lower_supp}));

    TensorElem expected(3);
    expected.add_term({Multisegment(upper_entries),
                       detail::repeated_label(seg, k),
                       Multisegment(lower_entries)},
                      1);
    builder.require(restricted == expected,
                    format_multisegment(table, Multisegment({seg})) + ", k=" + std::to_string(k),
                    "restricted expansion equals the single Lambda term",
                    "expansion differs");
    return builder.finish();
}

/// Lambda equality across every unitary window segment, k in {1, 2}.
inline CheckReport check_lambda_window(const LineTable& table, const InstanceWindow& w) {
    detail::ReportBuilder builder("lambda");
    for (const Segment& seg : enumerate_unitary_segments(table, w))
        for (int k = 1; k <= 2; ++k) {
            CheckReport one = check_lambda_equality(table, seg, k);
            builder.instance();
            for (const CheckFailure& f : one.failures)
                builder.require(false, f.instance, f.expected, f.actual);
        }
    return builder.finish();
}

/// m*_bottom(delta(D1) x delta(D2)) equals the two-term expression
/// delta(D1) delta(^-D2) (x) b(D2) + delta(^-D1) delta(D2) (x) b(D1).
inline CheckReport check_bottom_formulas(const LineTable& table, const Segment& d1,
                                         const Segment& d2) {
    detail::ReportBuilder builder("bottom");
    if (d1.line != d2.line) throw DomainError("check_bottom_formulas: segments on one line");

    builder.instance();
    RElem product = RElem::basis(Multisegment({d1, d2}));
    TensorElem actual = mstar_bottom(product);

    TensorElem expected(2);
    auto term = [&](const Segment& kept, const Segment& peeled) {
        std::vector<Segment> left{kept};
        if (auto rest = drop_first(peeled)) left.push_back(*rest);
        expected.add_term({Multisegment(std::move(left)), point_label(first_point(peeled))}, 1);
    };
    term(d1, d2);
    term(d2, d1);

    builder.require(actual == expected,
                    format_multisegment(table, Multisegment({d1, d2})),
                    "m*_bottom equals the two-term expression", "expansions differ");
    return builder.finish();
}

/// Bottom formula across all unordered same-line window pairs.
inline CheckReport check_bottom_window(const LineTable& table, const InstanceWindow& w) {
    detail::ReportBuilder builder("bottom");
    const std::vector<Segment> segments = enumerate_segments(table, w);
    for (std::size_t i = 0; i < segments.size(); ++i)
        for (std::size_t j = i; j < segments.size(); ++j) {
            if (segments[i].line != segments[j].line) continue;
            CheckReport one = check_bottom_formulas(table, segments[i], segments[j]);
            builder.instance();
            for (const CheckFailure& f : one.failures)
                builder.require(false, f.instance, f.expected, f.actual);
        }
    return builder.finish();
}

/// For every linked window pair: the Grothendieck identity, the word-level
/// containment of the non-Langlands summand, nonnegativity of the Langlands
/// class at word level, and the union-only summand for adjacent disjoint
/// pairs.
inline CheckReport check_linked_pair_suite(const LineTable& table, const InstanceWindow& w) {
    detail::ReportBuilder builder("linked-pairs");
    const std::vector<Segment> segments = enumerate_segments(table, w);
    for (std::size_t i = 0; i < segments.size(); ++i)
        for (std::size_t j = i; j < segments.size(); ++j) {
            const Segment& d1 = segments[i];
            const Segment& d2 = segments[j];
            if (!linked(d1, d2)) continue;
            builder.instance();
            const std::string instance = format_multisegment(table, Multisegment({d1, d2}));

            PairDecision decision = decide_pair(d1, d2);
            if (decision.status != PairDecision::Status::length_two) {
                builder.require(false, instance, "length-two decision", "irreducible");
                continue;
            }
            RElem pair_class = RElem::basis(decision.class_label);
            RElem other_class = RElem::basis(*decision.other_summand);

            builder.require(decision.langlands_class + other_class == pair_class, instance,
                            "L + other == pair class", "identity fails");

            WordSum pair_words = cuspidal_jacquet(pair_class);
            WordSum other_words = cuspidal_jacquet(other_class);
            builder.require(WordSum::dominates(other_words, pair_words), instance,
                            "jacquet(other) <= jacquet(pair) termwise", "containment fails");

            builder.require(cuspidal_jacquet(decision.langlands_class).is_nonnegative(), instance,
                            "jacquet(L) termwise nonnegative", "negative word coefficient");

            if (!intersect_segments(d1, d2)) {
                bool union_only = decision.other_summand->size() == 1 &&
                                  decision.other_summand->entries().front() ==
                                      *union_segments(d1, d2);
                builder.require(union_only, instance,
                                "adjacent disjoint pair: other summand is the union segment",
                                format_multisegment(table, *decision.other_summand));
            }
        }
    return builder.finish();
}

/// classify_square_integrable against a definitional oracle on all window
/// point multisets of size <= max_size, plus the Casselman cross-check.
inline CheckReport check_si_classifier(const LineTable& table, const InstanceWindow& w,
                                       int max_size = 4) {
    detail::ReportBuilder builder("si-classifier");
    for (const PointMultiset& points : enumerate_point_multisets(table, w, max_size)) {
        builder.instance();
        const std::string instance = format_point_multiset(table, points);

        // Oracle, straight from the definition: repetition-free points of one
        // line forming an unbroken chain, with the chain self-dual.
        bool simple = true;
        LineId line = points.begin()->first.line;
        std::vector<Rational> exps;
        for (const auto& [p, mult] : points) {
            if (mult != 1 || p.line != line) simple = false;
            exps.push_back(p.e);
        }
        bool chain = simple;
        for (std::size_t i = 0; chain && i + 1 < exps.size(); ++i)
            chain = exps[i + 1] - exps[i] == 1;
        bool self_dual =
            chain && table.dual(line) == line && exps.front() == -exps.back();

        SIClassification got = classify_square_integrable(table, points);
        bool agrees = self_dual
                          ? (got.segment && got.segment->line == line &&
                             got.segment->start == exps.front() && got.segment->end == exps.back())
                          : (!got.segment && got.essentially_only == (chain && !self_dual));
        builder.require(agrees, instance, "classifier matches definitional oracle",
                        got.segment ? format_segment(table, *got.segment)
                                    : (got.essentially_only ? "none (essentially only)" : "none"));

        if (got.segment) {
            CasselmanVerdict verdict = casselman(table, descending_word(*got.segment));
            builder.require(verdict.square_integrable, instance,
                            "descending word passes the Casselman criterion", "criterion fails");
        } else if (got.essentially_only && chain) {
            // The weight test sees exponent symmetry but not line duality:
            // on a dual-paired line a centered chain still passes it.
            Segment seg(line, exps.front(), exps.back());
            CasselmanVerdict verdict = casselman(table, descending_word(seg));
            bool centered = exps.front() == -exps.back();
            builder.require(verdict.essentially && verdict.square_integrable == centered,
                            instance, "word verdict matches the exponent symmetry",
                            "verdict disagrees");
        }
    }
    return builder.finish();
}

/// Named checks in canonical order.
inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "coassociativity", "counit",  "multiplicativity", "positivity",   "shuffle",
        "multiplicity-one", "lambda", "bottom",           "linked-pairs", "si-classifier"};
    return names;
}

inline CheckReport run_check(const std::string& name, const LineTable& table,
                             const InstanceWindow& w) {
    if (name == "coassociativity") return check_coassociativity(table, w);
    if (name == "counit") return check_counit(table, w);
    if (name == "multiplicativity") return check_multiplicativity(table, w);
    if (name == "positivity") return check_positivity(table, w);
    if (name == "shuffle") return check_shuffle_equivalence(table, w);
    if (name == "multiplicity-one") return check_multiplicity_one_window(table, w);
    if (name == "lambda") return check_lambda_window(table, w);
    if (name == "bottom") return check_bottom_window(table, w);
    if (name == "linked-pairs") return check_linked_pair_suite(table, w);
    if (name == "si-classifier") return check_si_classifier(table, w);
    throw DomainError("unknown check '" + name + "'");
}

inline std::vector<CheckReport> run_suite(const LineTable& table, const InstanceWindow& w,
                                          const std::vector<std::string>& names) {
    std::vector<CheckReport> reports;
    for (const std::string& name : names) reports.push_back(run_check(name, table, w));
    return reports;
}

}  // namespace segring
