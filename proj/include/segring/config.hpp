#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "segring/lines.hpp"

namespace segring {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

inline bool valid_line_id(std::string_view id) {
    if (id.empty()) return false;
    for (char c : id)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    // Reserved by the expression grammar.
    return id != "d" && id != "z" && id != "L" && id != "c" && id != "x" && id != "1";
}

}  // namespace detail

/// Parses the line-declaration document. One [id] section per line, with
/// `size = <positive int>` (default 1), `s = <positive rational>` (default 1)
/// and `dual = <id>` (default: the line itself). '#' starts a comment.
inline LineTable parse_config(const std::string& text) {
    std::vector<Line> lines;
    Line* current = nullptr;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view s = detail::trim(raw);
        if (auto hash = s.find('#'); hash != std::string_view::npos)
            s = detail::trim(s.substr(0, hash));
        if (s.empty()) continue;
        const std::string where = " (config line " + std::to_string(lineno) + ")";
        if (s.front() == '[') {
            if (s.back() != ']') throw ConfigError("unterminated section header" + where);
            std::string_view id = detail::trim(s.substr(1, s.size() - 2));
            if (!detail::valid_line_id(id))
                throw ConfigError("invalid line id '" + std::string(id) + "'" + where);
            lines.push_back(Line{std::string(id), 1, Rational(1), ""});
            current = &lines.back();
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string_view::npos || !current)
            throw ConfigError("expected [line] section or key = value" + where);
        std::string_view key = detail::trim(s.substr(0, eq));
        std::string_view value = detail::trim(s.substr(eq + 1));
        if (key == "size") {
            auto r = parse_rational(value);
            if (!r || !is_integer(*r) || *r < 1)
                throw ConfigError("size must be a positive integer" + where);
            current->size = static_cast<int>(r->numerator());
        } else if (key == "s") {
            auto r = parse_rational(value);
            if (!r || *r <= 0) throw ConfigError("s must be a positive rational" + where);
            current->s = *r;
        } else if (key == "dual") {
            if (!detail::valid_line_id(value))
                throw ConfigError("invalid dual id '" + std::string(value) + "'" + where);
            current->dual_id = std::string(value);
        } else {
            throw ConfigError("unknown key '" + std::string(key) + "'" + where);
        }
    }
    if (lines.empty()) throw ConfigError("configuration declares no lines");
    return LineTable(std::move(lines));
}

inline LineTable load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

/// One self-dual line rho with size 1 and s = 1; used when neither
/// SEGRING_CONFIG nor --config selects a document.
inline LineTable default_table() {
    return LineTable({Line{"rho", 1, Rational(1), "rho"}});
}

}  // namespace segring
