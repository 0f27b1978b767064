#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "segring/segment.hpp"

namespace segring {

/// Multiset of cuspidal points, with multiplicity.
using PointMultiset = std::map<Point, long long>;

/// Canonical multiset of nonempty segments. Labels the class of
/// delta(D_1) x ... x delta(D_k) in R; the empty multisegment is 1.
class Multisegment {
public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> entries) : entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end());
    }

    const std::vector<Segment>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    /// Multiset concatenation: the label of the product of the two classes.
    Multisegment concat(const Multisegment& other) const {
        std::vector<Segment> merged;
        merged.reserve(entries_.size() + other.entries_.size());
        std::merge(entries_.begin(), entries_.end(), other.entries_.begin(), other.entries_.end(),
                   std::back_inserter(merged));
        Multisegment out;
        out.entries_ = std::move(merged);
        return out;
    }

    friend bool operator==(const Multisegment& a, const Multisegment& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const Multisegment& a, const Multisegment& b) { return !(a == b); }
    friend bool operator<(const Multisegment& a, const Multisegment& b) {
        return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(),
                                            b.entries_.begin(), b.entries_.end());
    }

private:
    std::vector<Segment> entries_;
};

inline long long degree(const LineTable& table, const Multisegment& m) {
    long long total = 0;
    for (const Segment& seg : m.entries()) total += degree(table, seg);
    return total;
}

/// Cuspidal support: multiset union of the point sets of all entries.
inline PointMultiset supp(const Multisegment& m) {
    PointMultiset points;
    for (const Segment& seg : m.entries())
        for (const Point& p : points_ascending(seg)) ++points[p];
    return points;
}

inline Multisegment dual(const LineTable& table, const Multisegment& m) {
    std::vector<Segment> entries;
    entries.reserve(m.size());
    for (const Segment& seg : m.entries()) entries.push_back(dual(table, seg));
    return Multisegment(std::move(entries));
}

inline Multisegment twist(const Multisegment& m, const Rational& t) {
    std::vector<Segment> entries;
    entries.reserve(m.size());
    for (const Segment& seg : m.entries()) entries.push_back(twist(seg, t));
    return Multisegment(std::move(entries));
}

inline bool is_unitary(const LineTable& table, const Multisegment& m) {
    return dual(table, m) == m;
}

/// Singleton label {[p..p]}.
inline Multisegment point_label(const Point& p) {
    return Multisegment({Segment(p.line, p.e, p.e)});
}

/// True when the label is a single one-point segment, i.e. a cuspidal point.
inline bool is_cuspidal_point_label(const Multisegment& m) {
    return m.size() == 1 && m.entries().front().num_points() == 1;
}

}  // namespace segring
