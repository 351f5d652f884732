#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qaw {

class XPoly;

/// Malformed polynomial or scalar text; position is a 0-based byte offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position);
    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses an expression over the symbols t, u and (if allow_x) x with
/// + - * / ^, integer literals and parentheses. Division and negative powers
/// are allowed only for x-free operands.
XPoly parse_expression(std::string_view text, bool allow_x);

}  // namespace qaw
