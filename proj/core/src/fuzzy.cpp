#include "iods/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace iods {

namespace {

std::string triple_text(double a, double b, double c) {
    return "[" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + "]";
}

} // namespace

TriangularFuzzyNumber::TriangularFuzzyNumber(double left, double peak, double right)
    : left_(left), peak_(peak), right_(right) {
    if (!std::isfinite(left) || !std::isfinite(peak) || !std::isfinite(right)) {
        throw std::invalid_argument("triangular fuzzy number requires finite components, got " +
                                    triple_text(left, peak, right));
    }
    if (!(left <= peak && peak <= right)) {
        throw std::invalid_argument("triangular fuzzy number requires left <= peak <= right, got " +
                                    triple_text(left, peak, right));
    }
}

TriangularFuzzyNumber TriangularFuzzyNumber::from_sorted_triple(double a, double b, double c) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
        throw std::invalid_argument("from_sorted_triple requires finite values, got " +
                                    triple_text(a, b, c));
    }
    double lo = std::min({a, b, c});
    double hi = std::max({a, b, c});
    double mid = a + b + c - lo - hi;
    // Recover the middle by elimination only when it is safe; for values of
    // mixed magnitude fall back to an explicit sort.
    if (!(lo <= mid && mid <= hi)) {
        double v[3] = {a, b, c};
        std::sort(v, v + 3);
        lo = v[0];
        mid = v[1];
        hi = v[2];
    }
    return TriangularFuzzyNumber(lo, mid, hi);
}

double membership(const TriangularFuzzyNumber& tfn, double x) {
    if (x == tfn.peak()) {
        return 1.0;
    }
    if (x > tfn.left() && x < tfn.peak()) {
        return (x - tfn.left()) / (tfn.peak() - tfn.left());
    }
    if (x > tfn.peak() && x < tfn.right()) {
        return (tfn.right() - x) / (tfn.right() - tfn.peak());
    }
    // x == left or x == right lands here when that endpoint differs from the
    // peak, and the grade there is 0.
    return 0.0;
}

Interval alpha_cut(const TriangularFuzzyNumber& tfn, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::domain_error("alpha_cut requires alpha in [0, 1], got " + std::to_string(alpha));
    }
    if (alpha == 1.0) {
        return Interval{tfn.peak(), tfn.peak()};
    }
    const double lo = tfn.left() + alpha * (tfn.peak() - tfn.left());
    const double hi = tfn.right() + alpha * (tfn.peak() - tfn.right());
    return Interval{std::min(lo, hi), std::max(lo, hi)};
}

double crisp_value(const TriangularFuzzyNumber& tfn, double alpha, double beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw std::domain_error("crisp_value requires beta in [0, 1], got " + std::to_string(beta));
    }
    const Interval cut = alpha_cut(tfn, alpha);
    if (cut.lo == cut.hi) {
        return cut.lo;
    }
    // Convex blend; exact at beta = 0 and beta = 1.
    return (1.0 - beta) * cut.lo + beta * cut.hi;
}

} // namespace iods
