#ifndef IODS_EXPR_HPP
#define IODS_EXPR_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "iods/fuzzy.hpp"
#include "iods/search.hpp"

namespace iods {

/// Which crisp instantiation of a fuzzy literal to use: the lower support
/// endpoint, the peak, or the upper support endpoint.
enum class Slice { Left, Peak, Right };

constexpr const char* to_label(Slice s) noexcept {
    switch (s) {
        case Slice::Left: return "left";
        case Slice::Peak: return "peak";
        default: return "right";
    }
}

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct CrispConstant {
    double value;
};
struct FuzzyConstant {
    TriangularFuzzyNumber value;
};
struct VariableRef {
    std::size_t index;
};
struct Negate {
    ExprPtr child;
};
struct Sum {
    std::vector<ExprPtr> terms;
};
struct Product {
    std::vector<ExprPtr> factors;
};
struct Quotient {
    ExprPtr numerator;
    ExprPtr denominator;
};
/// Integer power with a non-negative exponent, so evaluation stays total
/// apart from division.
struct Power {
    ExprPtr base;
    int exponent;
};

/// Immutable expression tree over named variables with crisp and fuzzy
/// number literals. Nodes are shared freely across threads after
/// construction.
class Expr {
  public:
    using Node = std::variant<CrispConstant, FuzzyConstant, VariableRef, Negate, Sum, Product,
                              Quotient, Power>;

    explicit Expr(Node node) : node_(std::move(node)) {}

    const Node& node() const noexcept { return node_; }

  private:
    Node node_;
};

ExprPtr make_constant(double value);
ExprPtr make_fuzzy(TriangularFuzzyNumber value);
ExprPtr make_variable(std::size_t index);
ExprPtr make_negate(ExprPtr child);
ExprPtr make_sum(std::vector<ExprPtr> terms);
ExprPtr make_product(std::vector<ExprPtr> factors);
ExprPtr make_quotient(ExprPtr numerator, ExprPtr denominator);
/// Throws std::invalid_argument for a negative exponent.
ExprPtr make_power(ExprPtr base, int exponent);

struct Equation {
    ExprPtr lhs;
    ExprPtr rhs;
};

/// A system of equations over an ordered variable roster. Not required to
/// be square; the least-squares objective is defined either way.
struct FuzzySystem {
    std::vector<std::string> variables;
    std::vector<Equation> equations;
};

/// A system plus the search settings used to solve it.
struct ProblemSpec {
    FuzzySystem system;
    SearchConfig config;
};

/// Crisp arithmetic evaluation under the chosen slice: every fuzzy literal
/// contributes its left, peak, or right component. Division by zero follows
/// IEEE semantics and surfaces as a non-finite result.
double evaluate(const Expr& expr, std::span<const double> assignment, Slice slice);

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    /// Index of the offending equation, or npos for system-level findings.
    std::size_t equation = npos;
    std::string message;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Structural checks: non-empty roster and equation list, every variable
/// reference resolvable, constant equations flagged as degenerate
/// (warning). Empty result means the system is clean.
std::vector<Diagnostic> validate(const FuzzySystem& system);

/// Raised when a system fails validation with at least one error.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(std::vector<Diagnostic> diagnostics);

    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

  private:
    std::vector<Diagnostic> diagnostics_;
};

bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const FuzzySystem& a, const FuzzySystem& b);
/// Structural system equality plus bitwise-identical search settings.
bool structurally_equal(const ProblemSpec& a, const ProblemSpec& b);

/// Renders with minimal parentheses; numbers use shortest round-trip form.
std::string to_string(const Expr& expr, std::span<const std::string> variables);
std::string to_string(const TriangularFuzzyNumber& tfn);

/// The full problem-file text (vars/eq/init/step/eps/reduction/max_evals);
/// parsing it back yields a structurally equal ProblemSpec.
std::string to_problem_text(const ProblemSpec& problem);

} // namespace iods

#endif // IODS_EXPR_HPP
