#include "iods/search.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace iods {

void SearchConfig::validate(std::size_t dimension) const {
    if (dimension == 0) {
        throw std::invalid_argument("search requires at least one variable");
    }
    if (initial_point.size() != dimension) {
        throw std::invalid_argument("initial point has length " +
                                    std::to_string(initial_point.size()) + ", expected " +
                                    std::to_string(dimension));
    }
    if (step.size() != dimension) {
        throw std::invalid_argument("step vector has length " + std::to_string(step.size()) +
                                    ", expected " + std::to_string(dimension));
    }
    for (double x : initial_point) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("initial point must be finite");
        }
    }
    for (double s : step) {
        if (!(s > 0.0) || !std::isfinite(s)) {
            throw std::invalid_argument("every step component must be positive and finite");
        }
    }
    if (!(reduction_factor > 1.0) || !std::isfinite(reduction_factor)) {
        throw std::invalid_argument("reduction factor must be > 1");
    }
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw std::invalid_argument("epsilon must be > 0");
    }
    if (max_evaluations == 0) {
        throw std::invalid_argument("max_evaluations must be positive");
    }
}

std::vector<double> pattern_move(std::span<const double> current,
                                 std::span<const double> previous) {
    detail::check_same_size(current.size(), previous.size(), "pattern_move");
    std::vector<double> out(current.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = current[i] + (current[i] - previous[i]);
    }
    return out;
}

namespace detail {

void check_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

} // namespace detail

} // namespace iods
