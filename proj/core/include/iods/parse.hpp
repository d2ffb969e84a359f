#ifndef IODS_PARSE_HPP
#define IODS_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "iods/expr.hpp"

namespace iods {

enum class ParseCode {
    Syntax,
    UnknownVariable,
    DimensionMismatch,
    MalformedFuzzyLiteral,
    InvalidConfigValue,
    DuplicateDirective,
    MisplacedDirective,
};

/// Parse failure with a 1-based source position.
class ParseError : public std::runtime_error {
  public:
    ParseError(ParseCode code, std::size_t line, std::size_t column, const std::string& message);

    ParseCode code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    ParseCode code_;
    std::size_t line_;
    std::size_t column_;
};

/// Parses a line-oriented problem definition:
///
///   vars: <ident> (<ident>)*        exactly one, first directive
///   eq: <expr> = <expr>             one or more
///   init: <number>{n}               optional, default all 0
///   step: <number>{n}               optional, default all 0.5
///   eps: <number>                   optional, default 0.001
///   reduction: <number>             optional, default 2.0, must be > 1
///   max_evals: <integer>            optional, default 100000
///
/// '#' starts a comment to end of line. Expressions use + - (binary and
/// unary), * /, right-associative ^ with a non-negative integer exponent,
/// parentheses, decimal literals, fuzzy literals "[a, b, c]" with
/// a <= b <= c, and identifiers from the vars roster.
///
/// Throws ParseError on malformed input and ValidationError when the
/// parsed system fails validation.
ProblemSpec parse_problem(std::string_view text);

} // namespace iods

#endif // IODS_PARSE_HPP
