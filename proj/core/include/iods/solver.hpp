#ifndef IODS_SOLVER_HPP
#define IODS_SOLVER_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "iods/expr.hpp"
#include "iods/search.hpp"
#include "iods/slice.hpp"

namespace iods {

/// Whether the three slice solves run on one thread or three. The result
/// is bit-identical either way; only wall time differs.
enum class SliceExecution { Sequential, Concurrent };

struct SliceOutcome {
    SearchResult search;
    /// Residuals r_k evaluated at the slice minimizer.
    std::vector<double> residuals;
};

/// Per-variable triangular fuzzy solutions assembled by sorting the three
/// slice minimizer components, plus the raw per-slice outcomes.
struct FuzzySolution {
    std::vector<TriangularFuzzyNumber> values;
    SliceOutcome left;
    SliceOutcome peak;
    SliceOutcome right;

    const SliceOutcome& slice(Slice s) const noexcept {
        switch (s) {
            case Slice::Left: return left;
            case Slice::Peak: return peak;
            default: return right;
        }
    }
};

/// Self-contained record of one solve: re-running with the echoed config
/// on the same system reproduces every number bit-exactly (wall time
/// excepted).
struct SolverReport {
    std::vector<std::string> variables;
    FuzzySolution solution;
    SearchConfig config;
    double wall_ms = 0.0;
};

/// Slices the fuzzy system at left/peak/right, minimizes each crisp
/// sum-of-squares objective with the same settings, and sorts the
/// per-variable components into triangular fuzzy numbers. Throws
/// ValidationError when the system does not validate; budget exhaustion
/// is reported per slice via SearchResult::converged instead.
SolverReport solve(const ProblemSpec& problem,
                   SliceExecution execution = SliceExecution::Sequential);

struct VerifyMismatch {
    Slice slice = Slice::Left;
    std::string what;
    std::size_t index = 0;
    double stored = 0.0;
    double recomputed = 0.0;
};

struct VerificationReport {
    std::vector<VerifyMismatch> mismatches;

    bool clean() const noexcept { return mismatches.empty(); }
};

/// Recomputes every slice residual and objective at the stored minimizers
/// and re-sorts the assembly, flagging anything that drifted beyond 1e-12
/// from the stored values.
VerificationReport verify(const FuzzySolution& solution, const ProblemSpec& problem);

/// npoints uniform samples of [left, right] for one solution variable,
/// paired with their membership grades. Endpoints are sampled exactly.
std::vector<std::pair<double, double>> membership_samples(const FuzzySolution& solution,
                                                          std::size_t variable, int npoints);

} // namespace iods

#endif // IODS_SOLVER_HPP
