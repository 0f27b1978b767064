#pragma once

#include <compare>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace segring {

/// Exact rational number on 64-bit integers, always normalized (positive
/// denominator, reduced). Exponents, reducibility parameters and Casselman
/// weights all live here; nothing in the engine ever rounds.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
    constexpr Rational(int value) : num_(value) {}        // NOLINT: implicit by design
    constexpr Rational(long long numerator, long long denominator)
        : num_(numerator), den_(denominator) {
        normalize();
    }

    constexpr long long numerator() const { return num_; }
    constexpr long long denominator() const { return den_; }

    constexpr Rational operator-() const { return Rational(-num_, den_); }

    constexpr Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    constexpr Rational& operator-=(const Rational& o) { return *this += -o; }
    constexpr Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    constexpr Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend constexpr Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend constexpr Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend constexpr Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend constexpr Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend constexpr bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

private:
    constexpr void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const long long g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline std::string format_rational(const Rational& r) {
    std::string out = std::to_string(r.numerator());
    if (r.denominator() != 1) {
        out += '/';
        out += std::to_string(r.denominator());
    }
    return out;
}

/// Parses "p" or "p/q" with an optional leading '-'. The denominator must be
/// a positive integer. Returns nullopt on any other shape.
inline std::optional<Rational> parse_rational(std::string_view text) {
    auto read_int = [](std::string_view& s, bool allow_sign) -> std::optional<long long> {
        std::size_t i = 0;
        bool neg = false;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i >= s.size() || s[i] < '0' || s[i] > '9') return std::nullopt;
        long long value = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            value = value * 10 + (s[i] - '0');
            ++i;
        }
        s.remove_prefix(i);
        return neg ? -value : value;
    };

    auto numerator = read_int(text, true);
    if (!numerator) return std::nullopt;
    if (text.empty()) return Rational(*numerator);
    if (text.front() != '/') return std::nullopt;
    text.remove_prefix(1);
    auto denominator = read_int(text, false);
    if (!denominator || *denominator <= 0 || !text.empty()) return std::nullopt;
    return Rational(*numerator, *denominator);
}

}  // namespace segring
