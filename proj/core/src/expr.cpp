#include "iods/expr.hpp"

#include <cmath>
#include <utility>

#include "format_util.hpp"

namespace iods {

ExprPtr make_constant(double value) {
    return std::make_shared<const Expr>(CrispConstant{value});
}

ExprPtr make_fuzzy(TriangularFuzzyNumber value) {
    return std::make_shared<const Expr>(FuzzyConstant{value});
}

ExprPtr make_variable(std::size_t index) {
    return std::make_shared<const Expr>(VariableRef{index});
}

ExprPtr make_negate(ExprPtr child) {
    return std::make_shared<const Expr>(Negate{std::move(child)});
}

ExprPtr make_sum(std::vector<ExprPtr> terms) {
    if (terms.size() == 1) {
        return terms.front();
    }
    return std::make_shared<const Expr>(Sum{std::move(terms)});
}

ExprPtr make_product(std::vector<ExprPtr> factors) {
    if (factors.size() == 1) {
        return factors.front();
    }
    return std::make_shared<const Expr>(Product{std::move(factors)});
}

ExprPtr make_quotient(ExprPtr numerator, ExprPtr denominator) {
    return std::make_shared<const Expr>(Quotient{std::move(numerator), std::move(denominator)});
}

ExprPtr make_power(ExprPtr base, int exponent) {
    if (exponent < 0) {
        throw std::invalid_argument("power exponent must be a non-negative integer, got " +
                                    std::to_string(exponent));
    }
    return std::make_shared<const Expr>(Power{std::move(base), exponent});
}

namespace {

double slice_component(const TriangularFuzzyNumber& tfn, Slice slice) {
    switch (slice) {
        case Slice::Left: return tfn.left();
        case Slice::Peak: return tfn.peak();
        default: return tfn.right();
    }
}

// Exponentiation by squaring; deterministic for a fixed exponent.
double int_pow(double base, int exponent) {
    double result = 1.0;
    double factor = base;
    for (int e = exponent; e > 0; e >>= 1) {
        if (e & 1) {
            result *= factor;
        }
        factor *= factor;
    }
    return result;
}

} // namespace

double evaluate(const Expr& expr, std::span<const double> assignment, Slice slice) {
    struct Visitor {
        std::span<const double> x;
        Slice slice;

        double operator()(const CrispConstant& c) const { return c.value; }
        double operator()(const FuzzyConstant& f) const { return slice_component(f.value, slice); }
        double operator()(const VariableRef& v) const {
            if (v.index >= x.size()) {
                throw std::out_of_range("variable index " + std::to_string(v.index) +
                                        " outside assignment of length " +
                                        std::to_string(x.size()));
            }
            return x[v.index];
        }
        double operator()(const Negate& n) const { return -evaluate(*n.child, x, slice); }
        double operator()(const Sum& s) const {
            double acc = 0.0;
            for (const ExprPtr& term : s.terms) {
                acc += evaluate(*term, x, slice);
            }
            return acc;
        }
        double operator()(const Product& p) const {
            double acc = 1.0;
            for (const ExprPtr& factor : p.factors) {
                acc *= evaluate(*factor, x, slice);
            }
            return acc;
        }
        double operator()(const Quotient& q) const {
            return evaluate(*q.numerator, x, slice) / evaluate(*q.denominator, x, slice);
        }
        double operator()(const Power& p) const { return int_pow(evaluate(*p.base, x, slice), p.exponent); }
    };
    return std::visit(Visitor{assignment, slice}, expr.node());
}

namespace {

struct UsageScan {
    std::size_t max_index_seen = 0;
    bool any_variable = false;

    void scan(const Expr& expr) {
        struct Visitor {
            UsageScan& out;
            void operator()(const CrispConstant&) const {}
            void operator()(const FuzzyConstant&) const {}
            void operator()(const VariableRef& v) const {
                out.any_variable = true;
                if (v.index > out.max_index_seen) {
                    out.max_index_seen = v.index;
                }
            }
            void operator()(const Negate& n) const { out.scan(*n.child); }
            void operator()(const Sum& s) const {
                for (const ExprPtr& t : s.terms) {
                    out.scan(*t);
                }
            }
            void operator()(const Product& p) const {
                for (const ExprPtr& f : p.factors) {
                    out.scan(*f);
                }
            }
            void operator()(const Quotient& q) const {
                out.scan(*q.numerator);
                out.scan(*q.denominator);
            }
            void operator()(const Power& p) const { out.scan(*p.base); }
        };
        std::visit(Visitor{*this}, expr.node());
    }
};

} // namespace

std::vector<Diagnostic> validate(const FuzzySystem& system) {
    std::vector<Diagnostic> out;
    if (system.variables.empty()) {
        out.push_back({Severity::Error, Diagnostic::npos, "system declares no variables"});
    }
    if (system.equations.empty()) {
        out.push_back({Severity::Error, Diagnostic::npos, "empty system: no equations"});
    }
    for (std::size_t k = 0; k < system.equations.size(); ++k) {
        const Equation& eq = system.equations[k];
        if (!eq.lhs || !eq.rhs) {
            out.push_back({Severity::Error, k, "equation has a missing side"});
            continue;
        }
        UsageScan usage;
        usage.scan(*eq.lhs);
        usage.scan(*eq.rhs);
        if (usage.any_variable && usage.max_index_seen >= system.variables.size()) {
            out.push_back({Severity::Error, k,
                           "unresolved variable index " + std::to_string(usage.max_index_seen) +
                               " in a system of " + std::to_string(system.variables.size()) +
                               " variables"});
        }
        if (!usage.any_variable) {
            out.push_back({Severity::Warning, k, "degenerate equation: both sides are constant"});
        }
    }
    return out;
}

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(diagnostics.empty() ? "validation failed"
                                             : "validation failed: " + diagnostics.front().message),
      diagnostics_(std::move(diagnostics)) {}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.node().index() != b.node().index()) {
        return false;
    }
    struct Visitor {
        const Expr::Node& other;

        bool operator()(const CrispConstant& c) const {
            return std::get<CrispConstant>(other).value == c.value;
        }
        bool operator()(const FuzzyConstant& f) const {
            return std::get<FuzzyConstant>(other).value == f.value;
        }
        bool operator()(const VariableRef& v) const {
            return std::get<VariableRef>(other).index == v.index;
        }
        bool operator()(const Negate& n) const {
            return structurally_equal(*n.child, *std::get<Negate>(other).child);
        }
        bool operator()(const Sum& s) const {
            const Sum& o = std::get<Sum>(other);
            if (o.terms.size() != s.terms.size()) {
                return false;
            }
            for (std::size_t i = 0; i < s.terms.size(); ++i) {
                if (!structurally_equal(*s.terms[i], *o.terms[i])) {
                    return false;
                }
            }
            return true;
        }
        bool operator()(const Product& p) const {
            const Product& o = std::get<Product>(other);
            if (o.factors.size() != p.factors.size()) {
                return false;
            }
            for (std::size_t i = 0; i < p.factors.size(); ++i) {
                if (!structurally_equal(*p.factors[i], *o.factors[i])) {
                    return false;
                }
            }
            return true;
        }
        bool operator()(const Quotient& q) const {
            const Quotient& o = std::get<Quotient>(other);
            return structurally_equal(*q.numerator, *o.numerator) &&
                   structurally_equal(*q.denominator, *o.denominator);
        }
        bool operator()(const Power& p) const {
            const Power& o = std::get<Power>(other);
            return p.exponent == o.exponent && structurally_equal(*p.base, *o.base);
        }
    };
    return std::visit(Visitor{b.node()}, a.node());
}

bool structurally_equal(const FuzzySystem& a, const FuzzySystem& b) {
    if (a.variables != b.variables || a.equations.size() != b.equations.size()) {
        return false;
    }
    for (std::size_t k = 0; k < a.equations.size(); ++k) {
        if (!structurally_equal(*a.equations[k].lhs, *b.equations[k].lhs) ||
            !structurally_equal(*a.equations[k].rhs, *b.equations[k].rhs)) {
            return false;
        }
    }
    return true;
}

bool structurally_equal(const ProblemSpec& a, const ProblemSpec& b) {
    return structurally_equal(a.system, b.system) &&
           a.config.initial_point == b.config.initial_point && a.config.step == b.config.step &&
           a.config.reduction_factor == b.config.reduction_factor &&
           a.config.epsilon == b.config.epsilon &&
           a.config.max_evaluations == b.config.max_evaluations;
}

namespace {

// Precedence levels used by the printer: sum < product/quotient < unary
// minus < power < atom.
enum : int { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

int precedence_of(const Expr& e) {
    struct Visitor {
        int operator()(const CrispConstant&) const { return kAtom; }
        int operator()(const FuzzyConstant&) const { return kAtom; }
        int operator()(const VariableRef&) const { return kAtom; }
        int operator()(const Negate&) const { return kUnary; }
        int operator()(const Sum&) const { return kSum; }
        int operator()(const Product&) const { return kProduct; }
        int operator()(const Quotient&) const { return kProduct; }
        int operator()(const Power&) const { return kPower; }
    };
    return std::visit(Visitor{}, e.node());
}

void print_expr(std::string& out, const Expr& e, std::span<const std::string> vars, int min_prec);

void print_child(std::string& out, const Expr& child, std::span<const std::string> vars,
                 int min_prec) {
    if (precedence_of(child) < min_prec) {
        out += '(';
        print_expr(out, child, vars, kSum);
        out += ')';
    } else {
        print_expr(out, child, vars, min_prec);
    }
}

void print_expr(std::string& out, const Expr& e, std::span<const std::string> vars, int) {
    struct Visitor {
        std::string& out;
        std::span<const std::string> vars;

        void operator()(const CrispConstant& c) const {
            if (c.value < 0.0 || (c.value == 0.0 && std::signbit(c.value))) {
                // Negative literals only arise from programmatic construction;
                // keep them reparseable as unary minus.
                out += '(';
                out += detail::format_full(c.value);
                out += ')';
            } else {
                out += detail::format_full(c.value);
            }
        }
        void operator()(const FuzzyConstant& f) const { out += to_string(f.value); }
        void operator()(const VariableRef& v) const {
            if (v.index < vars.size()) {
                out += vars[v.index];
            } else {
                out += "@" + std::to_string(v.index);
            }
        }
        void operator()(const Negate& n) const {
            out += '-';
            print_child(out, *n.child, vars, kUnary);
        }
        void operator()(const Sum& s) const {
            for (std::size_t i = 0; i < s.terms.size(); ++i) {
                const Expr& term = *s.terms[i];
                if (i == 0) {
                    print_child(out, term, vars, kSum + 1);
                    continue;
                }
                if (const auto* neg = std::get_if<Negate>(&term.node())) {
                    out += " - ";
                    print_child(out, *neg->child, vars, kSum + 1);
                } else {
                    out += " + ";
                    print_child(out, term, vars, kSum + 1);
                }
            }
        }
        void operator()(const Product& p) const {
            for (std::size_t i = 0; i < p.factors.size(); ++i) {
                if (i > 0) {
                    out += "*";
                }
                print_child(out, *p.factors[i], vars, i == 0 ? kProduct : kProduct + 1);
            }
        }
        void operator()(const Quotient& q) const {
            print_child(out, *q.numerator, vars, kProduct);
            out += "/";
            print_child(out, *q.denominator, vars, kProduct + 1);
        }
        void operator()(const Power& p) const {
            print_child(out, *p.base, vars, kAtom);
            out += "^";
            out += std::to_string(p.exponent);
        }
    };
    std::visit(Visitor{out, vars}, e.node());
}

} // namespace

std::string to_string(const Expr& expr, std::span<const std::string> variables) {
    std::string out;
    print_expr(out, expr, variables, kSum);
    return out;
}

std::string to_string(const TriangularFuzzyNumber& tfn) {
    return "[" + detail::format_full(tfn.left()) + ", " + detail::format_full(tfn.peak()) + ", " +
           detail::format_full(tfn.right()) + "]";
}

std::string to_problem_text(const ProblemSpec& problem) {
    std::string out;
    out += "vars:";
    for (const std::string& name : problem.system.variables) {
        out += ' ';
        out += name;
    }
    out += '\n';
    for (const Equation& eq : problem.system.equations) {
        out += "eq: ";
        out += to_string(*eq.lhs, problem.system.variables);
        out += " = ";
        out += to_string(*eq.rhs, problem.system.variables);
        out += '\n';
    }
    out += "init:";
    for (double v : problem.config.initial_point) {
        out += ' ';
        out += detail::format_full(v);
    }
    out += '\n';
    out += "step:";
    for (double v : problem.config.step) {
        out += ' ';
        out += detail::format_full(v);
    }
    out += '\n';
    out += "eps: " + detail::format_full(problem.config.epsilon) + '\n';
    out += "reduction: " + detail::format_full(problem.config.reduction_factor) + '\n';
    out += "max_evals: " + std::to_string(problem.config.max_evaluations) + '\n';
    return out;
}

} // namespace iods
