#ifndef IODS_FUZZY_HPP
#define IODS_FUZZY_HPP

namespace iods {

/// A triangular fuzzy number [left, peak, right] with piecewise-linear
/// membership rising from 0 at `left` to 1 at `peak` and falling back to 0
/// at `right`. Construction enforces left <= peak <= right; a degenerate
/// number (left == peak == right) embeds an ordinary crisp value.
class TriangularFuzzyNumber {
  public:
    /// Throws std::invalid_argument on non-finite components or violated
    /// ordering.
    TriangularFuzzyNumber(double left, double peak, double right);

    /// Builds a valid number from three unordered finite values.
    static TriangularFuzzyNumber from_sorted_triple(double a, double b, double c);

    double left() const noexcept { return left_; }
    double peak() const noexcept { return peak_; }
    double right() const noexcept { return right_; }

    bool degenerate() const noexcept { return left_ == right_; }

    friend bool operator==(const TriangularFuzzyNumber&, const TriangularFuzzyNumber&) = default;

  private:
    double left_;
    double peak_;
    double right_;
};

/// A closed interval [lo, hi]; produced by alpha_cut, so lo <= hi always.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Membership grade of x, in [0, 1]. Total on the reals; a degenerate
/// number has grade 1 exactly at its peak and 0 elsewhere.
double membership(const TriangularFuzzyNumber& tfn, double x);

/// The interval of all points with membership >= alpha:
/// [left + alpha*(peak - left), right + alpha*(peak - right)].
/// alpha = 0 gives the support, alpha = 1 collapses to the peak.
/// Throws std::domain_error for alpha outside [0, 1].
Interval alpha_cut(const TriangularFuzzyNumber& tfn, double alpha);

/// Crisp representative: the alpha-cut endpoint blend lo + beta*(hi - lo).
/// beta = 0 selects the lower endpoint exactly, beta = 1 the upper.
/// Throws std::domain_error for alpha or beta outside [0, 1].
double crisp_value(const TriangularFuzzyNumber& tfn, double alpha, double beta);

} // namespace iods

#endif // IODS_FUZZY_HPP
