#include "iods/slice.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace iods {

namespace {

ExprPtr rewrite_fuzzy(const ExprPtr& expr, const std::function<double(const TriangularFuzzyNumber&)>& crisp) {
    struct Visitor {
        const ExprPtr& original;
        const std::function<double(const TriangularFuzzyNumber&)>& crisp;

        ExprPtr operator()(const CrispConstant&) const { return original; }
        ExprPtr operator()(const VariableRef&) const { return original; }
        ExprPtr operator()(const FuzzyConstant& f) const { return make_constant(crisp(f.value)); }
        ExprPtr operator()(const Negate& n) const {
            return make_negate(rewrite_fuzzy(n.child, crisp));
        }
        ExprPtr operator()(const Sum& s) const {
            std::vector<ExprPtr> terms;
            terms.reserve(s.terms.size());
            for (const ExprPtr& t : s.terms) {
                terms.push_back(rewrite_fuzzy(t, crisp));
            }
            return std::make_shared<const Expr>(Sum{std::move(terms)});
        }
        ExprPtr operator()(const Product& p) const {
            std::vector<ExprPtr> factors;
            factors.reserve(p.factors.size());
            for (const ExprPtr& f : p.factors) {
                factors.push_back(rewrite_fuzzy(f, crisp));
            }
            return std::make_shared<const Expr>(Product{std::move(factors)});
        }
        ExprPtr operator()(const Quotient& q) const {
            return make_quotient(rewrite_fuzzy(q.numerator, crisp),
                                 rewrite_fuzzy(q.denominator, crisp));
        }
        ExprPtr operator()(const Power& p) const {
            return make_power(rewrite_fuzzy(p.base, crisp), p.exponent);
        }
    };
    return std::visit(Visitor{expr, crisp}, expr->node());
}

CrispSystem build_crisp(const FuzzySystem& system,
                        const std::function<double(const TriangularFuzzyNumber&)>& crisp) {
    CrispSystem out;
    out.variables = system.variables;
    out.residuals.reserve(system.equations.size());
    for (const Equation& eq : system.equations) {
        std::vector<ExprPtr> terms;
        terms.push_back(rewrite_fuzzy(eq.lhs, crisp));
        terms.push_back(make_negate(rewrite_fuzzy(eq.rhs, crisp)));
        out.residuals.push_back(std::make_shared<const Expr>(Sum{std::move(terms)}));
    }
    return out;
}

} // namespace

CrispSystem extract_slice(const FuzzySystem& system, Slice slice) {
    return build_crisp(system, [slice](const TriangularFuzzyNumber& tfn) {
        switch (slice) {
            case Slice::Left: return tfn.left();
            case Slice::Peak: return tfn.peak();
            default: return tfn.right();
        }
    });
}

CrispSystem alpha_slice(const FuzzySystem& system, double alpha, Side side) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::domain_error("alpha_slice requires alpha in [0, 1]");
    }
    const double beta = side == Side::Left ? 0.0 : 1.0;
    return build_crisp(system, [alpha, beta](const TriangularFuzzyNumber& tfn) {
        return crisp_value(tfn, alpha, beta);
    });
}

double Objective::operator()(std::span<const double> x) const {
    evaluations_.fetch_add(1, std::memory_order_relaxed);
    double total = 0.0;
    for (const ExprPtr& residual : system_.residuals) {
        const double r = evaluate(*residual, x, Slice::Peak);
        total += r * r;
    }
    if (!std::isfinite(total)) {
        return std::numeric_limits<double>::infinity();
    }
    return total;
}

std::vector<double> Objective::residuals(std::span<const double> x) const {
    std::vector<double> out;
    out.reserve(system_.residuals.size());
    for (const ExprPtr& residual : system_.residuals) {
        out.push_back(evaluate(*residual, x, Slice::Peak));
    }
    return out;
}

} // namespace iods
