#include "iods/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace iods {

ParseError::ParseError(ParseCode code, std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      code_(code),
      line_(line),
      column_(column) {}

namespace {

enum class TokenKind {
    Ident,
    Number,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Equals,
    End,
};

struct Token {
    TokenKind kind = TokenKind::End;
    std::string_view text;
    std::size_t column = 0; // 1-based within the line
};

[[noreturn]] void fail(ParseCode code, std::size_t line, std::size_t column,
                       const std::string& message) {
    throw ParseError(code, line, column, message);
}

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

/// Tokenizes the payload of one directive line. `offset` is the 1-based
/// column of the payload's first character in the original line.
std::vector<Token> tokenize(std::string_view text, std::size_t line, std::size_t offset) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        const std::size_t column = offset + i;
        if (c == ' ' || c == '\t') {
            ++i;
            continue;
        }
        auto single = [&](TokenKind kind) {
            out.push_back({kind, text.substr(i, 1), column});
            ++i;
        };
        switch (c) {
            case '+': single(TokenKind::Plus); continue;
            case '-': single(TokenKind::Minus); continue;
            case '*': single(TokenKind::Star); continue;
            case '/': single(TokenKind::Slash); continue;
            case '^': single(TokenKind::Caret); continue;
            case '(': single(TokenKind::LParen); continue;
            case ')': single(TokenKind::RParen); continue;
            case '[': single(TokenKind::LBracket); continue;
            case ']': single(TokenKind::RBracket); continue;
            case ',': single(TokenKind::Comma); continue;
            case '=': single(TokenKind::Equals); continue;
            default: break;
        }
        if (ident_start(c)) {
            std::size_t j = i + 1;
            while (j < text.size() && ident_char(text[j])) {
                ++j;
            }
            out.push_back({TokenKind::Ident, text.substr(i, j - i), column});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t j = i;
            bool any_digit = false;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                ++j;
                any_digit = true;
            }
            if (j < text.size() && text[j] == '.') {
                ++j;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                    ++j;
                    any_digit = true;
                }
            }
            if (!any_digit) {
                fail(ParseCode::Syntax, line, column, "malformed number");
            }
            if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
                    ++k;
                }
                if (k >= text.size() || !std::isdigit(static_cast<unsigned char>(text[k]))) {
                    fail(ParseCode::Syntax, line, column, "malformed number exponent");
                }
                j = k;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                    ++j;
                }
            }
            out.push_back({TokenKind::Number, text.substr(i, j - i), column});
            i = j;
            continue;
        }
        fail(ParseCode::Syntax, line, column, std::string("unexpected character '") + c + "'");
    }
    out.push_back({TokenKind::End, {}, offset + text.size()});
    return out;
}

double number_value(const Token& token, std::size_t line) {
    double value = 0.0;
    const char* first = token.text.data();
    const char* last = first + token.text.size();
    auto [end, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range || end != last || !std::isfinite(value)) {
        fail(ParseCode::Syntax, line, token.column, "number out of range");
    }
    return value;
}

class TokenStream {
  public:
    TokenStream(std::vector<Token> tokens, std::size_t line)
        : tokens_(std::move(tokens)), line_(line) {}

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() {
        const Token& t = tokens_[pos_];
        if (t.kind != TokenKind::End) {
            ++pos_;
        }
        return t;
    }
    bool accept(TokenKind kind) {
        if (peek().kind == kind) {
            ++pos_;
            return true;
        }
        return false;
    }
    const Token& expect(TokenKind kind, const char* what) {
        if (peek().kind != kind) {
            fail(ParseCode::Syntax, line_, peek().column, std::string("expected ") + what);
        }
        return next();
    }
    std::size_t line() const { return line_; }

  private:
    std::vector<Token> tokens_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

double parse_signed_number(TokenStream& ts) {
    bool negative = false;
    if (ts.accept(TokenKind::Minus)) {
        negative = true;
    } else {
        ts.accept(TokenKind::Plus);
    }
    const Token& token = ts.expect(TokenKind::Number, "a number");
    const double value = number_value(token, ts.line());
    return negative ? -value : value;
}

class ExprParser {
  public:
    ExprParser(TokenStream& ts, std::span<const std::string> variables)
        : ts_(ts), variables_(variables) {}

    ExprPtr parse() { return parse_sum(); }

  private:
    ExprPtr parse_sum() {
        std::vector<ExprPtr> terms;
        terms.push_back(parse_term());
        for (;;) {
            if (ts_.accept(TokenKind::Plus)) {
                terms.push_back(parse_term());
            } else if (ts_.accept(TokenKind::Minus)) {
                terms.push_back(make_negate(parse_term()));
            } else {
                break;
            }
        }
        return make_sum(std::move(terms));
    }

    ExprPtr parse_term() {
        std::vector<ExprPtr> factors;
        factors.push_back(parse_factor());
        for (;;) {
            if (ts_.accept(TokenKind::Star)) {
                factors.push_back(parse_factor());
            } else if (ts_.accept(TokenKind::Slash)) {
                ExprPtr numerator = make_product(std::move(factors));
                factors.clear();
                factors.push_back(make_quotient(std::move(numerator), parse_factor()));
            } else {
                break;
            }
        }
        return make_product(std::move(factors));
    }

    ExprPtr parse_factor() {
        if (ts_.accept(TokenKind::Minus)) {
            return make_negate(parse_factor());
        }
        if (ts_.accept(TokenKind::Plus)) {
            return parse_factor();
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (ts_.accept(TokenKind::Caret)) {
            return make_power(std::move(base), parse_exponent());
        }
        return base;
    }

    /// Integer exponent; a chain like 2^3 folds right-associatively into a
    /// single value, so x^2^3 means x^(2^3).
    int parse_exponent() {
        std::vector<long long> chain;
        chain.push_back(parse_exponent_literal());
        while (ts_.accept(TokenKind::Caret)) {
            chain.push_back(parse_exponent_literal());
        }
        long long value = chain.back();
        for (std::size_t i = chain.size() - 1; i-- > 0;) {
            value = checked_int_pow(chain[i], value);
        }
        return static_cast<int>(value);
    }

    long long parse_exponent_literal() {
        const Token& token = ts_.peek();
        if (token.kind != TokenKind::Number || token.text.find('.') != std::string_view::npos ||
            token.text.find('e') != std::string_view::npos ||
            token.text.find('E') != std::string_view::npos) {
            fail(ParseCode::Syntax, ts_.line(), token.column,
                 "exponent must be a non-negative integer");
        }
        ts_.next();
        long long value = 0;
        const char* first = token.text.data();
        const char* last = first + token.text.size();
        auto [end, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || end != last || value > kMaxExponent) {
            fail(ParseCode::Syntax, ts_.line(), token.column, "exponent too large");
        }
        return value;
    }

    long long checked_int_pow(long long base, long long exp) {
        long long result = 1;
        for (long long i = 0; i < exp; ++i) {
            result *= base;
            if (result > kMaxExponent) {
                fail(ParseCode::Syntax, ts_.line(), ts_.peek().column, "exponent too large");
            }
        }
        return result;
    }

    ExprPtr parse_atom() {
        const Token& token = ts_.peek();
        switch (token.kind) {
            case TokenKind::Number: {
                ts_.next();
                return make_constant(number_value(token, ts_.line()));
            }
            case TokenKind::Ident: {
                ts_.next();
                for (std::size_t i = 0; i < variables_.size(); ++i) {
                    if (variables_[i] == token.text) {
                        return make_variable(i);
                    }
                }
                fail(ParseCode::UnknownVariable, ts_.line(), token.column,
                     "unknown variable '" + std::string(token.text) + "'");
            }
            case TokenKind::LParen: {
                ts_.next();
                ExprPtr inner = parse_sum();
                ts_.expect(TokenKind::RParen, "')'");
                return inner;
            }
            case TokenKind::LBracket: {
                const std::size_t column = token.column;
                ts_.next();
                const double a = parse_signed_number(ts_);
                ts_.expect(TokenKind::Comma, "','");
                const double b = parse_signed_number(ts_);
                ts_.expect(TokenKind::Comma, "','");
                const double c = parse_signed_number(ts_);
                ts_.expect(TokenKind::RBracket, "']'");
                if (!(a <= b && b <= c)) {
                    fail(ParseCode::MalformedFuzzyLiteral, ts_.line(), column,
                         "fuzzy literal components must satisfy a <= b <= c");
                }
                return make_fuzzy(TriangularFuzzyNumber(a, b, c));
            }
            default:
                fail(ParseCode::Syntax, ts_.line(), token.column, "expected an expression");
        }
    }

    static constexpr long long kMaxExponent = 1000000;

    TokenStream& ts_;
    std::span<const std::string> variables_;
};

struct DirectiveLine {
    std::string_view keyword;
    std::string_view payload;
    std::size_t line = 0;
    std::size_t keyword_column = 0;
    std::size_t payload_column = 0;
};

std::optional<DirectiveLine> split_directive(std::string_view raw, std::size_t line_number) {
    std::string_view text = raw;
    if (auto hash = text.find('#'); hash != std::string_view::npos) {
        text = text.substr(0, hash);
    }
    std::size_t begin = 0;
    while (begin < text.size() && (text[begin] == ' ' || text[begin] == '\t')) {
        ++begin;
    }
    std::size_t end = text.size();
    while (end > begin && (text[end - 1] == ' ' || text[end - 1] == '\t' || text[end - 1] == '\r')) {
        --end;
    }
    if (begin == end) {
        return std::nullopt;
    }
    text = text.substr(begin, end - begin);

    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        fail(ParseCode::Syntax, line_number, begin + 1, "expected '<directive>:'");
    }
    DirectiveLine out;
    out.keyword = text.substr(0, colon);
    out.payload = text.substr(colon + 1);
    out.line = line_number;
    out.keyword_column = begin + 1;
    out.payload_column = begin + colon + 2;
    // Trim payload leading space, keeping the column honest.
    while (!out.payload.empty() && (out.payload.front() == ' ' || out.payload.front() == '\t')) {
        out.payload.remove_prefix(1);
        ++out.payload_column;
    }
    return out;
}

std::vector<double> parse_number_list(const DirectiveLine& d) {
    TokenStream ts(tokenize(d.payload, d.line, d.payload_column), d.line);
    std::vector<double> out;
    while (ts.peek().kind != TokenKind::End) {
        out.push_back(parse_signed_number(ts));
        ts.accept(TokenKind::Comma);
    }
    return out;
}

double parse_single_number(const DirectiveLine& d) {
    TokenStream ts(tokenize(d.payload, d.line, d.payload_column), d.line);
    const double value = parse_signed_number(ts);
    if (ts.peek().kind != TokenKind::End) {
        fail(ParseCode::Syntax, d.line, ts.peek().column, "trailing input after number");
    }
    return value;
}

} // namespace

ProblemSpec parse_problem(std::string_view text) {
    std::vector<std::string> variables;
    std::vector<Equation> equations;
    std::optional<std::vector<double>> init;
    std::optional<std::vector<double>> step;
    std::optional<double> eps;
    std::optional<double> reduction;
    std::optional<std::uint64_t> max_evals;
    bool vars_seen = false;
    bool any_directive = false;

    std::size_t line_number = 0;
    std::size_t cursor = 0;
    while (cursor <= text.size()) {
        const std::size_t nl = text.find('\n', cursor);
        const std::string_view raw =
            text.substr(cursor, nl == std::string_view::npos ? text.size() - cursor : nl - cursor);
        cursor = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_number;

        const auto directive = split_directive(raw, line_number);
        if (!directive) {
            continue;
        }
        const DirectiveLine& d = *directive;

        if (d.keyword == "vars") {
            if (vars_seen) {
                fail(ParseCode::DuplicateDirective, d.line, d.keyword_column,
                     "duplicate 'vars' directive");
            }
            if (any_directive) {
                fail(ParseCode::MisplacedDirective, d.line, d.keyword_column,
                     "'vars' must be the first directive");
            }
            TokenStream ts(tokenize(d.payload, d.line, d.payload_column), d.line);
            while (ts.peek().kind != TokenKind::End) {
                const Token& token = ts.expect(TokenKind::Ident, "a variable name");
                std::string name(token.text);
                for (const std::string& existing : variables) {
                    if (existing == name) {
                        fail(ParseCode::Syntax, d.line, token.column,
                             "duplicate variable '" + name + "'");
                    }
                }
                variables.push_back(std::move(name));
            }
            if (variables.empty()) {
                fail(ParseCode::Syntax, d.line, d.payload_column,
                     "'vars' requires at least one variable name");
            }
            vars_seen = true;
        } else if (d.keyword == "eq") {
            TokenStream ts(tokenize(d.payload, d.line, d.payload_column), d.line);
            ExprParser parser(ts, variables);
            ExprPtr lhs = parser.parse();
            ts.expect(TokenKind::Equals, "'='");
            ExprPtr rhs = parser.parse();
            if (ts.peek().kind != TokenKind::End) {
                fail(ParseCode::Syntax, d.line, ts.peek().column,
                     "trailing input after equation");
            }
            equations.push_back({std::move(lhs), std::move(rhs)});
        } else if (d.keyword == "init" || d.keyword == "step") {
            auto& slot = d.keyword == "init" ? init : step;
            if (slot) {
                fail(ParseCode::DuplicateDirective, d.line, d.keyword_column,
                     "duplicate '" + std::string(d.keyword) + "' directive");
            }
            std::vector<double> values = parse_number_list(d);
            if (values.size() != variables.size()) {
                fail(ParseCode::DimensionMismatch, d.line, d.payload_column,
                     "'" + std::string(d.keyword) + "' lists " + std::to_string(values.size()) +
                         " values for " + std::to_string(variables.size()) + " variables");
            }
            if (d.keyword == "step") {
                for (double s : values) {
                    if (!(s > 0.0)) {
                        fail(ParseCode::InvalidConfigValue, d.line, d.payload_column,
                             "'step' components must be > 0");
                    }
                }
            }
            slot = std::move(values);
        } else if (d.keyword == "eps") {
            if (eps) {
                fail(ParseCode::DuplicateDirective, d.line, d.keyword_column,
                     "duplicate 'eps' directive");
            }
            const double value = parse_single_number(d);
            if (!(value > 0.0)) {
                fail(ParseCode::InvalidConfigValue, d.line, d.payload_column, "'eps' must be > 0");
            }
            eps = value;
        } else if (d.keyword == "reduction") {
            if (reduction) {
                fail(ParseCode::DuplicateDirective, d.line, d.keyword_column,
                     "duplicate 'reduction' directive");
            }
            const double value = parse_single_number(d);
            if (!(value > 1.0)) {
                fail(ParseCode::InvalidConfigValue, d.line, d.payload_column,
                     "'reduction' must be > 1");
            }
            reduction = value;
        } else if (d.keyword == "max_evals") {
            if (max_evals) {
                fail(ParseCode::DuplicateDirective, d.line, d.keyword_column,
                     "duplicate 'max_evals' directive");
            }
            const double value = parse_single_number(d);
            if (!(value >= 1.0) || value != std::floor(value) || value > 1e18) {
                fail(ParseCode::InvalidConfigValue, d.line, d.payload_column,
                     "'max_evals' must be a positive integer");
            }
            max_evals = static_cast<std::uint64_t>(value);
        } else {
            fail(ParseCode::Syntax, d.line, d.keyword_column,
                 "unknown directive '" + std::string(d.keyword) + "'");
        }
        any_directive = true;
    }

    ProblemSpec problem;
    problem.system.variables = std::move(variables);
    problem.system.equations = std::move(equations);
    const std::size_t n = problem.system.variables.size();
    problem.config.initial_point = init ? std::move(*init) : std::vector<double>(n, 0.0);
    problem.config.step = step ? std::move(*step) : std::vector<double>(n, 0.5);
    problem.config.epsilon = eps.value_or(1e-3);
    problem.config.reduction_factor = reduction.value_or(2.0);
    problem.config.max_evaluations = max_evals.value_or(100000);

    std::vector<Diagnostic> diagnostics = validate(problem.system);
    std::erase_if(diagnostics, [](const Diagnostic& d) { return d.severity != Severity::Error; });
    if (!diagnostics.empty()) {
        throw ValidationError(std::move(diagnostics));
    }
    problem.config.validate(n);
    return problem;
}

} // namespace iods
