#pragma once

#include <optional>
#include <vector>

#include "segring/errors.hpp"
#include "segring/lines.hpp"
#include "segring/rational.hpp"

namespace segring {

/// A segment [nu_rho^start rho, nu_rho^end rho]: the consecutive points
/// start, start+1, ..., end on one line. Always nonempty; end - start is a
/// nonnegative integer.
struct Segment {
    LineId line = 0;
    Rational start{0};
    Rational end{0};

    Segment() = default;
    Segment(LineId line_, Rational start_, Rational end_)
        : line(line_), start(std::move(start_)), end(std::move(end_)) {
        Rational diff = end - start;
        if (diff < 0 || !is_integer(diff))
            throw MalformedSegment("segment endpoints must differ by a nonnegative integer");
    }

    long long num_points() const { return (end - start).numerator() + 1; }

    friend bool operator==(const Segment& a, const Segment& b) {
        return a.line == b.line && a.start == b.start && a.end == b.end;
    }
    friend bool operator!=(const Segment& a, const Segment& b) { return !(a == b); }
    friend bool operator<(const Segment& a, const Segment& b) {
        if (a.line != b.line) return a.line < b.line;
        if (a.start != b.start) return a.start < b.start;
        return a.end < b.end;
    }
};

inline Segment segment_from_endpoints(LineId line, const Rational& a, const Rational& b) {
    return Segment(line, a, b);
}

inline long long degree(const LineTable& table, const Segment& seg) {
    return seg.num_points() * table[seg.line].size;
}

inline bool contains_point(const Segment& seg, const Point& p) {
    if (seg.line != p.line) return false;
    if (p.e < seg.start || seg.end < p.e) return false;
    return is_integer(p.e - seg.start);
}

inline std::vector<Point> points_ascending(const Segment& seg) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(seg.num_points()));
    for (Rational e = seg.start; e <= seg.end; e += 1) pts.push_back(Point{seg.line, e});
    return pts;
}

inline std::vector<Point> points_descending(const Segment& seg) {
    std::vector<Point> pts = points_ascending(seg);
    std::reverse(pts.begin(), pts.end());
    return pts;
}

/// b(Delta): the starting (lowest) representation of the segment.
inline Point first_point(const Segment& seg) { return Point{seg.line, seg.start}; }

inline Point last_point(const Segment& seg) { return Point{seg.line, seg.end}; }

/// ^-Delta = Delta minus b(Delta); empty when Delta is a singleton.
inline std::optional<Segment> drop_first(const Segment& seg) {
    if (seg.start == seg.end) return std::nullopt;
    return Segment(seg.line, seg.start + 1, seg.end);
}

/// True when both segments step through the same coset of Z, so their point
/// sets can interact at all.
inline bool aligned(const Segment& a, const Segment& b) {
    return a.line == b.line && is_integer(a.start - b.start);
}

/// Set-union of the point sets when that union is again an unbroken interval;
/// nullopt signals not-a-segment. Cross-line inputs are rejected.
inline std::optional<Segment> union_segments(const Segment& a, const Segment& b) {
    if (a.line != b.line) throw MalformedSegment("union of segments on different lines");
    if (!aligned(a, b)) return std::nullopt;
    if (std::max(a.start, b.start) > std::min(a.end, b.end) + 1) return std::nullopt;
    return Segment(a.line, std::min(a.start, b.start), std::max(a.end, b.end));
}

/// The (possibly empty) common interval.
inline std::optional<Segment> intersect_segments(const Segment& a, const Segment& b) {
    if (a.line != b.line) throw MalformedSegment("intersection of segments on different lines");
    if (!aligned(a, b)) return std::nullopt;
    Rational lo = std::max(a.start, b.start);
    Rational hi = std::min(a.end, b.end);
    if (lo > hi) return std::nullopt;
    return Segment(a.line, lo, hi);
}

inline Segment dual(const LineTable& table, const Segment& seg) {
    return Segment(table.dual(seg.line), -seg.end, -seg.start);
}

inline Segment twist(const Segment& seg, const Rational& t) {
    return Segment(seg.line, seg.start + t, seg.end + t);
}

inline bool is_unitary(const LineTable& table, const Segment& seg) {
    return dual(table, seg) == seg;
}

}  // namespace segring
