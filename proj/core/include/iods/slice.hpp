#ifndef IODS_SLICE_HPP
#define IODS_SLICE_HPP

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "iods/expr.hpp"

namespace iods {

/// Which alpha-cut endpoint alpha_slice instantiates.
enum class Side { Left, Right };

/// A fuzzy system frozen at one slice: the variable roster plus one
/// residual expression lhs - rhs per equation, with every fuzzy literal
/// replaced by a crisp constant.
struct CrispSystem {
    std::vector<std::string> variables;
    std::vector<ExprPtr> residuals;
};

/// Replaces every fuzzy literal by its left, peak, or right component;
/// the expression structure is otherwise unchanged.
CrispSystem extract_slice(const FuzzySystem& system, Slice slice);

/// General parametric form: every fuzzy literal becomes the lower
/// (Side::Left) or upper (Side::Right) endpoint of its alpha-cut.
/// alpha_slice(s, 0, Left/Right) matches extract_slice(s, Left/Right) and
/// alpha_slice(s, 1, either) matches extract_slice(s, Peak) node for node.
CrispSystem alpha_slice(const FuzzySystem& system, double alpha, Side side);

/// Sum-of-squared-residuals function F(x) = sum_k r_k(x)^2 over a crisp
/// system. Non-finite sub-evaluations (division by zero, overflow) yield
/// +infinity so a direct search treats such points as strictly worse than
/// any finite value. The call counter is atomic, so concurrent evaluation
/// is safe and the evaluated values never depend on scheduling.
class Objective {
  public:
    explicit Objective(CrispSystem system) : system_(std::move(system)) {}

    Objective(const Objective& other)
        : system_(other.system_), evaluations_(other.evaluations_.load()) {}
    Objective& operator=(const Objective& other) {
        system_ = other.system_;
        evaluations_.store(other.evaluations_.load());
        return *this;
    }

    double operator()(std::span<const double> x) const;

    /// Raw residual values r_k(x); diagnostic only, not counted.
    std::vector<double> residuals(std::span<const double> x) const;

    std::uint64_t evaluations() const noexcept { return evaluations_.load(); }
    std::size_t dimension() const noexcept { return system_.variables.size(); }
    const CrispSystem& system() const noexcept { return system_; }

  private:
    CrispSystem system_;
    mutable std::atomic<std::uint64_t> evaluations_{0};
};

} // namespace iods

#endif // IODS_SLICE_HPP
