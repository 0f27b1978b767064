#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "segring/config.hpp"
#include "segring/harness.hpp"
#include "segring/structure.hpp"

namespace segring {

namespace detail {

// Recursive-descent parser for the ring-element grammar:
//   expr     := term { "+" term }
//   term     := [ integer "*" ] factor { "x" factor }
//   factor   := "d(" seg ")" | "z(" point ")" | "L(" seg "," seg ")"
//             | "c(" point ")" | "1"
//   seg      := line_id "," rational "," rational
//   point    := line_id ":" rational
//   rational := integer [ "/" positive-integer ]
// Whitespace-insensitive; "x" is the product, "+" the sum.
class ExprParser {
public:
    ExprParser(std::string_view text, const LineTable& table) : text_(text), table_(table) {}

    RElem parse() {
        skip_space();
        RElem value = parse_expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return value;
    }

private:
    RElem parse_expr() {
        RElem value = parse_term();
        while (true) {
            skip_space();
            if (!consume('+')) return value;
            value += parse_term();
        }
    }

    RElem parse_term() {
        skip_space();
        long long coeff = 1;
        bool have_factor = false;
        RElem value = RElem::unit();
        if (peek_integer()) {
            std::size_t mark = pos_;
            long long n = parse_integer();
            skip_space();
            if (consume('*')) {
                coeff = n;
            } else if (n == 1) {
                have_factor = true;  // the unit factor "1"
            } else {
                pos_ = mark;
                fail("integer coefficient must be followed by '*'");
            }
        }
        if (!have_factor) value *= parse_factor();
        while (true) {
            skip_space();
            if (!consume('x')) break;
            value *= parse_factor();
        }
        return coeff * value;
    }

    RElem parse_factor() {
        skip_space();
        if (peek_integer()) {
            std::size_t mark = pos_;
            if (parse_integer() == 1) return RElem::unit();
            pos_ = mark;
            fail("expected factor");
        }
        std::size_t mark = pos_;
        std::string name = parse_identifier("factor");
        if (name == "d") {
            expect('(');
            Segment seg = parse_segment();
            expect(')');
            return RElem::basis(Multisegment({seg}));
        }
        if (name == "c") {
            expect('(');
            Point p = parse_point();
            expect(')');
            return RElem::basis(point_label(p));
        }
        if (name == "z") {
            expect('(');
            Point p = parse_point();
            expect(')');
            return zelevinsky_class(p);
        }
        if (name == "L") {
            expect('(');
            Segment first = parse_segment();
            skip_space();
            expect(',');
            Segment second = parse_segment();
            expect(')');
            PairDecision decision = decide_pair(first, second);
            if (decision.status != PairDecision::Status::length_two)
                throw ParseError("L of a non-linked pair", mark);
            return decision.langlands_class;
        }
        pos_ = mark;
        fail("expected one of d(, z(, L(, c(, 1");
        return RElem::zero();  // unreachable
    }

    Segment parse_segment() {
        std::size_t mark = pos_;
        LineId line = parse_line_id();
        skip_space();
        expect(',');
        Rational a = parse_rational_token();
        skip_space();
        expect(',');
        Rational b = parse_rational_token();
        if (b - a < 0 || !is_integer(b - a))
            throw ParseError("malformed segment: endpoints must differ by a nonnegative integer",
                             mark);
        return Segment(line, a, b);
    }

    Point parse_point() {
        LineId line = parse_line_id();
        skip_space();
        expect(':');
        return Point{line, parse_rational_token()};
    }

    LineId parse_line_id() {
        std::size_t mark = pos_;
        std::string id = parse_identifier("line id");
        if (!table_.contains(id)) throw ParseError("unknown line id '" + id + "'", mark);
        return table_.find(id);
    }

    Rational parse_rational_token() {
        skip_space();
        long long numerator = parse_integer();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::size_t mark = pos_;
            long long denominator = parse_integer();
            if (denominator <= 0) throw ParseError("denominator must be positive", mark);
            return Rational(numerator, denominator);
        }
        return Rational(numerator);
    }

    bool peek_integer() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) return true;
        return text_[pos_] == '-' && pos_ + 1 < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
    }

    long long parse_integer() {
        skip_space();
        if (!peek_integer()) fail("expected integer");
        bool neg = text_[pos_] == '-';
        if (neg) ++pos_;
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            value = value * 10 + (text_[pos_++] - '0');
        return neg ? -value : value;
    }

    std::string parse_identifier(const char* what) {
        skip_space();
        std::size_t begin = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (begin == pos_) fail(std::string("expected ") + what);
        return std::string(text_.substr(begin, pos_ - begin));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_space();
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    std::string_view text_;
    const LineTable& table_;
    std::size_t pos_ = 0;
};

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= text.size(); ++i)
        if (i == text.size() || text[i] == sep) {
            parts.push_back(text.substr(begin, i - begin));
            begin = i + 1;
        }
    return parts;
}

}  // namespace detail

/// Parses an expression of the ring-element grammar into an RElem.
inline RElem parse_expr(std::string_view text, const LineTable& table) {
    return detail::ExprParser(text, table).parse();
}

/// "rho,0,1" -> segment; the form used by decide/tempered arguments.
inline Segment parse_segment_arg(std::string_view text, const LineTable& table) {
    auto parts = detail::split(text, ',');
    if (parts.size() != 3) throw ParseError("expected line,start,end", 0);
    LineId line = table.find(std::string(detail::trim(parts[0])));
    auto a = parse_rational(detail::trim(parts[1]));
    auto b = parse_rational(detail::trim(parts[2]));
    if (!a || !b) throw ParseError("bad rational in segment", 0);
    if (*b - *a < 0 || !is_integer(*b - *a))
        throw ParseError("malformed segment: endpoints must differ by a nonnegative integer", 0);
    return Segment(line, *a, *b);
}

/// "rho:1/2" -> point.
inline Point parse_point_arg(std::string_view text, const LineTable& table) {
    auto parts = detail::split(text, ':');
    if (parts.size() != 2) throw ParseError("expected line:exponent", 0);
    LineId line = table.find(std::string(detail::trim(parts[0])));
    auto e = parse_rational(detail::trim(parts[1]));
    if (!e) throw ParseError("bad exponent", 0);
    return Point{line, *e};
}

/// "rho:1,rho:0" -> ordered word.
inline Word parse_word_arg(std::string_view text, const LineTable& table) {
    Word w;
    for (auto part : detail::split(text, ','))
        w.push_back(parse_point_arg(detail::trim(part), table));
    return w;
}

/// Same syntax as a word, read as an unordered multiset.
inline PointMultiset parse_point_multiset_arg(std::string_view text, const LineTable& table) {
    PointMultiset points;
    for (const Point& p : parse_word_arg(text, table)) ++points[p];
    return points;
}

/// ";"-separated point multisets, e.g. "rho:1;rho:0,rho:1;". An empty group
/// is the empty multiset.
inline std::vector<PointMultiset> parse_profile_arg(std::string_view text,
                                                    const LineTable& table) {
    std::vector<PointMultiset> profile;
    for (auto group : detail::split(text, ';')) {
        group = detail::trim(group);
        PointMultiset points;
        if (!group.empty())
            for (const Point& p : parse_word_arg(group, table)) ++points[p];
        profile.push_back(std::move(points));
    }
    return profile;
}

/// Window spec: comma-separated key=value pairs over the defaults, e.g.
/// "lo=-2,hi=2,points=3,factors=3,grid=1/2,lines=rho+sigma".
inline InstanceWindow parse_window_arg(std::string_view text, const LineTable& table) {
    InstanceWindow w;
    if (detail::trim(text).empty()) return w;
    for (auto part : detail::split(text, ',')) {
        part = detail::trim(part);
        auto eq = part.find('=');
        if (eq == std::string_view::npos) throw ParseError("window spec expects key=value", 0);
        std::string_view key = detail::trim(part.substr(0, eq));
        std::string_view value = detail::trim(part.substr(eq + 1));
        auto rational_value = [&]() {
            auto r = parse_rational(value);
            if (!r) throw ParseError("bad rational in window spec", 0);
            return *r;
        };
        auto int_value = [&]() {
            auto r = parse_rational(value);
            if (!r || !is_integer(*r) || *r < 1)
                throw ParseError("window spec expects a positive integer", 0);
            return static_cast<int>(r->numerator());
        };
        if (key == "lo") {
            w.lo = rational_value();
        } else if (key == "hi") {
            w.hi = rational_value();
        } else if (key == "grid") {
            w.grid = rational_value();
            if (w.grid <= 0) throw ParseError("window grid must be positive", 0);
        } else if (key == "points") {
            w.max_segment_points = int_value();
        } else if (key == "factors") {
            w.max_factors = int_value();
        } else if (key == "lines") {
            for (auto id : detail::split(value, '+'))
                w.lines.push_back(table.find(std::string(detail::trim(id))));
        } else {
            throw ParseError("unknown window key '" + std::string(key) + "'", 0);
        }
    }
    if (w.lo > w.hi) throw ParseError("window lo exceeds hi", 0);
    return w;
}

}  // namespace segring
