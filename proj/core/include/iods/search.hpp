#ifndef IODS_SEARCH_HPP
#define IODS_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace iods {

/// Settings for one direct-search run. `step` holds the per-coordinate
/// probe increments; on every failed round all of them are divided by
/// `reduction_factor` until the largest drops below `epsilon`.
struct SearchConfig {
    std::vector<double> initial_point;
    std::vector<double> step;
    double reduction_factor = 2.0;
    double epsilon = 1e-3;
    std::uint64_t max_evaluations = 100000;

    /// Throws std::invalid_argument unless every invariant holds and both
    /// vectors have length `dimension`.
    void validate(std::size_t dimension) const;
    void validate() const { validate(initial_point.size()); }
};

struct SearchResult {
    std::vector<double> minimizer;
    double objective_value = std::numeric_limits<double>::infinity();
    std::uint64_t outer_iterations = 0;
    std::uint64_t evaluations = 0;
    /// True when the run stopped because max(step) fell below epsilon,
    /// false when the evaluation budget ran out first.
    bool converged = false;
};

struct ExploratoryOutcome {
    std::vector<double> point;
    double value = std::numeric_limits<double>::infinity();
    bool success = false;
};

/// Invoked after every accepted incumbent, starting with the initial point.
using AcceptObserver = std::function<void(std::span<const double>, double)>;

/// Componentwise extrapolation current + (current - previous).
std::vector<double> pattern_move(std::span<const double> current, std::span<const double> previous);

namespace detail {

inline double max_component(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) {
        if (x > m) {
            m = x;
        }
    }
    return m;
}

void check_same_size(std::size_t a, std::size_t b, const char* what);

} // namespace detail

/// One exploratory sweep: coordinates are probed in order at +step and
/// -step from the point updated so far, keeping the best of the three
/// values. Ties keep the current point, then prefer the +step probe.
/// Costs at most 2N+1 objective calls (2N when base_value is supplied).
template <typename Fn>
ExploratoryOutcome exploratory_move(Fn&& objective,
                                    std::span<const double> base,
                                    std::span<const double> step,
                                    std::optional<double> base_value = std::nullopt) {
    detail::check_same_size(base.size(), step.size(), "exploratory_move");
    std::vector<double> point(base.begin(), base.end());
    double value = base_value ? *base_value
                              : std::invoke(objective, std::span<const double>(point));
    bool moved = false;
    for (std::size_t i = 0; i < point.size(); ++i) {
        const double center = point[i];
        point[i] = center + step[i];
        const double plus = std::invoke(objective, std::span<const double>(point));
        point[i] = center - step[i];
        const double minus = std::invoke(objective, std::span<const double>(point));
        if (plus < value && plus <= minus) {
            point[i] = center + step[i];
            value = plus;
            moved = true;
        } else if (minus < value && minus < plus) {
            value = minus;
            moved = true;
        } else {
            point[i] = center;
        }
    }
    return ExploratoryOutcome{std::move(point), value, moved};
}

/// Hooke-Jeeves direct search: exploratory sweeps around the incumbent,
/// pattern extrapolation while it keeps strictly improving, and geometric
/// step reduction once neither does. Deterministic for a deterministic
/// objective.
template <typename Fn>
SearchResult minimize(Fn&& objective,
                      const SearchConfig& config,
                      const AcceptObserver& on_accept = {}) {
    config.validate();

    std::uint64_t evaluations = 0;
    bool exhausted = false;
    auto budgeted = [&](std::span<const double> x) -> double {
        if (evaluations >= config.max_evaluations) {
            exhausted = true;
            return std::numeric_limits<double>::infinity();
        }
        ++evaluations;
        return std::invoke(objective, x);
    };

    std::vector<double> step = config.step;
    std::vector<double> incumbent = config.initial_point;
    double incumbent_value = budgeted(std::span<const double>(incumbent));
    std::uint64_t outer_iterations = 0;

    auto finish = [&](bool converged) {
        return SearchResult{incumbent, incumbent_value, outer_iterations, evaluations, converged};
    };
    if (exhausted) {
        return finish(false);
    }
    if (on_accept) {
        on_accept(incumbent, incumbent_value);
    }

    for (;;) {
        ++outer_iterations;
        ExploratoryOutcome sweep =
            exploratory_move(budgeted, incumbent, step, incumbent_value);
        if (exhausted) {
            return finish(false);
        }
        if (sweep.success) {
            std::vector<double> previous = std::exchange(incumbent, std::move(sweep.point));
            incumbent_value = sweep.value;
            if (on_accept) {
                on_accept(incumbent, incumbent_value);
            }
            // Pattern chain: extrapolate past the incumbent and explore
            // there; keep going while the result strictly improves.
            for (;;) {
                std::vector<double> pattern = pattern_move(incumbent, previous);
                ExploratoryOutcome candidate = exploratory_move(budgeted, pattern, step);
                if (exhausted) {
                    return finish(false);
                }
                if (candidate.value < incumbent_value) {
                    previous = std::exchange(incumbent, std::move(candidate.point));
                    incumbent_value = candidate.value;
                    if (on_accept) {
                        on_accept(incumbent, incumbent_value);
                    }
                } else {
                    break;
                }
            }
        }
        // Both a failed sweep and a stalled pattern chain land here: stop
        // once the largest step is below epsilon, otherwise shrink and retry.
        if (detail::max_component(step) < config.epsilon) {
            return finish(true);
        }
        for (double& s : step) {
            s /= config.reduction_factor;
        }
    }
}

/// Exhaustive evaluation over an inclusive uniform grid; the test oracle
/// for small instances. Ties keep the lexicographically first index.
/// Refuses more than 3 dimensions.
template <typename Fn>
std::pair<std::vector<double>, double> grid_minimize(Fn&& objective,
                                                     std::span<const double> lower,
                                                     std::span<const double> upper,
                                                     int points_per_axis) {
    detail::check_same_size(lower.size(), upper.size(), "grid_minimize");
    const std::size_t n = lower.size();
    if (n == 0 || n > 3) {
        throw std::invalid_argument("grid_minimize handles 1 to 3 dimensions");
    }
    if (points_per_axis < 2) {
        throw std::invalid_argument("grid_minimize requires at least 2 points per axis");
    }
    for (std::size_t d = 0; d < n; ++d) {
        if (!(lower[d] < upper[d])) {
            throw std::invalid_argument("grid_minimize requires lower < upper on every axis");
        }
    }

    std::vector<int> index(n, 0);
    std::vector<double> point(n);
    std::vector<double> best_point;
    double best_value = std::numeric_limits<double>::infinity();
    const double denom = static_cast<double>(points_per_axis - 1);
    for (;;) {
        for (std::size_t d = 0; d < n; ++d) {
            point[d] = index[d] == points_per_axis - 1
                           ? upper[d]
                           : lower[d] + (upper[d] - lower[d]) * (index[d] / denom);
        }
        const double value = std::invoke(objective, std::span<const double>(point));
        if (value < best_value) {
            best_value = value;
            best_point = point;
        }
        // Odometer with the last axis fastest: lexicographic visiting order.
        std::size_t d = n;
        while (d-- > 0) {
            if (++index[d] < points_per_axis) {
                break;
            }
            index[d] = 0;
            if (d == 0) {
                return {std::move(best_point), best_value};
            }
        }
    }
}

} // namespace iods

#endif // IODS_SEARCH_HPP
