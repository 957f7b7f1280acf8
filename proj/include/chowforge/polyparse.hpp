#pragma once

// Text format for polynomials and ideal files.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER | IDENT | '(' expr ')'
//
// Identifiers are [a-z][a-z0-9_]*. Juxtaposition (`2t`) is rejected.
//
// An ideal file is a `ring: name:weight, ...` header followed by one
// relation per line. `#` starts a comment; blank lines are skipped.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "chowforge/intpoly.hpp"

namespace chowforge {

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset, std::size_t line = 0);

    /// Byte offset of the offending token (within the line for ideal files).
    std::size_t offset() const { return offset_; }
    /// 1-based line number, 0 when parsing a single expression.
    std::size_t line() const { return line_; }
    /// Message without the position prefix.
    const std::string& message() const { return message_; }

private:
    std::string message_;
    std::size_t offset_;
    std::size_t line_;
};

Polynomial parse_poly(std::string_view src, const Ring& ring);

struct IdealFile {
    Ring ring;
    std::vector<Polynomial> relations;
};

IdealFile parse_ideal_file(std::string_view src);

/// Inverse of parse_ideal_file up to comments.
std::string format_ideal_file(const Ring& ring, const std::vector<Polynomial>& relations);

}  // namespace chowforge
