#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace segring {

/// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Segment endpoints whose difference is not a nonnegative integer,
/// cross-line interval arithmetic, and similar shape violations.
struct MalformedSegment : Error {
    using Error::Error;
};

/// Bad line declarations: duplicate ids, unresolved or non-involutive duals,
/// duals that change size or s.
struct ConfigError : Error {
    using Error::Error;
};

/// Violated operation precondition (empty word, non-unitary entry,
/// arity mismatch, L of a non-linked pair, ...).
struct DomainError : Error {
    using Error::Error;
};

/// No permutation of the given segments satisfies the extraction ordering.
struct NoOrderingError : Error {
    using Error::Error;
};

/// Expression or argument syntax error; `position` is a 0-based offset into
/// the offending text.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& message, std::size_t pos)
        : Error(message + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace segring
