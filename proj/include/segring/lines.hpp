#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "segring/errors.hpp"
#include "segring/rational.hpp"

namespace segring {

/// Index of a cuspidal line inside a LineTable. Tables store lines sorted by
/// identifier, so comparing indices is the same as comparing ids.
using LineId = int;

/// A declared cuspidal line: an abstract unitary cuspidal representation rho
/// together with its block size n_rho and reducibility parameter s_rho.
/// `dual_id` names the line carrying the Hermitian dual (itself by default).
struct Line {
    std::string id;
    int size = 1;
    Rational s{1};
    std::string dual_id;
};

/// The set of declared lines. Distinct lines are pairwise inequivalent under
/// all twists; the dual map is an involution preserving size and s.
class LineTable {
public:
    explicit LineTable(std::vector<Line> lines) : lines_(std::move(lines)) {
        std::sort(lines_.begin(), lines_.end(),
                  [](const Line& a, const Line& b) { return a.id < b.id; });
        for (std::size_t i = 0; i + 1 < lines_.size(); ++i)
            if (lines_[i].id == lines_[i + 1].id)
                throw ConfigError("duplicate line id '" + lines_[i].id + "'");
        dual_.resize(lines_.size());
        for (std::size_t i = 0; i < lines_.size(); ++i) {
            Line& line = lines_[i];
            if (line.size < 1) throw ConfigError("line '" + line.id + "': size must be >= 1");
            if (line.s <= 0) throw ConfigError("line '" + line.id + "': s must be positive");
            if (line.dual_id.empty()) line.dual_id = line.id;
            dual_[i] = index_of(line.dual_id);
            if (dual_[i] < 0)
                throw ConfigError("line '" + line.id + "': unknown dual '" + line.dual_id + "'");
        }
        for (std::size_t i = 0; i < lines_.size(); ++i) {
            const Line& partner = lines_[dual_[i]];
            if (dual_[dual_[i]] != static_cast<LineId>(i))
                throw ConfigError("dual map is not an involution at '" + lines_[i].id + "'");
            if (partner.size != lines_[i].size || partner.s != lines_[i].s)
                throw ConfigError("dual of '" + lines_[i].id + "' changes size or s");
        }
    }

    int count() const { return static_cast<int>(lines_.size()); }

    const Line& operator[](LineId id) const { return lines_[static_cast<std::size_t>(id)]; }

    LineId dual(LineId id) const { return dual_[static_cast<std::size_t>(id)]; }

    /// Index of the line with the given identifier; throws on unknown ids.
    LineId find(std::string_view id) const {
        LineId idx = index_of(id);
        if (idx < 0) throw ConfigError("unknown line id '" + std::string(id) + "'");
        return idx;
    }

    bool contains(std::string_view id) const { return index_of(id) >= 0; }

private:
    LineId index_of(std::string_view id) const {
        for (std::size_t i = 0; i < lines_.size(); ++i)
            if (lines_[i].id == id) return static_cast<LineId>(i);
        return -1;
    }

    std::vector<Line> lines_;
    std::vector<LineId> dual_;
};

/// A point nu_rho^e rho on a cuspidal line: the twist of the line's base
/// representation by the e-th power of nu_rho (e in nu_rho units, exact).
struct Point {
    LineId line = 0;
    Rational e{0};

    friend bool operator==(const Point& a, const Point& b) {
        return a.line == b.line && a.e == b.e;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.line != b.line) return a.line < b.line;
        return a.e < b.e;
    }
};

/// n_rho * s_rho * e: the contribution of the point to the Casselman sums.
inline Rational casselman_weight(const LineTable& table, const Point& p) {
    const Line& line = table[p.line];
    return Rational(line.size) * line.s * p.e;
}

inline Point dual(const LineTable& table, const Point& p) {
    return Point{table.dual(p.line), -p.e};
}

inline Point twist(const Point& p, const Rational& t) { return Point{p.line, p.e + t}; }

}  // namespace segring
