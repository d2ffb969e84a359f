#include "iods/solver.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <stdexcept>

namespace iods {

namespace {

constexpr double kVerifyTolerance = 1e-12;

bool matches(double stored, double recomputed) {
    return stored == recomputed || std::abs(stored - recomputed) <= kVerifyTolerance;
}

} // namespace

SolverReport solve(const ProblemSpec& problem, SliceExecution execution) {
    std::vector<Diagnostic> diagnostics = validate(problem.system);
    std::erase_if(diagnostics, [](const Diagnostic& d) { return d.severity != Severity::Error; });
    if (!diagnostics.empty()) {
        throw ValidationError(std::move(diagnostics));
    }
    problem.config.validate(problem.system.variables.size());

    const Objective objectives[3] = {
        Objective(extract_slice(problem.system, Slice::Left)),
        Objective(extract_slice(problem.system, Slice::Peak)),
        Objective(extract_slice(problem.system, Slice::Right)),
    };

    auto run = [&](int i) { return minimize(objectives[i], problem.config); };

    const auto started = std::chrono::steady_clock::now();
    std::array<SearchResult, 3> results;
    if (execution == SliceExecution::Concurrent) {
        std::future<SearchResult> futures[3] = {
            std::async(std::launch::async, run, 0),
            std::async(std::launch::async, run, 1),
            std::async(std::launch::async, run, 2),
        };
        for (int i = 0; i < 3; ++i) {
            results[i] = futures[i].get();
        }
    } else {
        for (int i = 0; i < 3; ++i) {
            results[i] = run(i);
        }
    }
    const auto finished = std::chrono::steady_clock::now();

    SolverReport report;
    report.variables = problem.system.variables;
    report.config = problem.config;
    report.wall_ms =
        std::chrono::duration<double, std::milli>(finished - started).count();

    FuzzySolution& solution = report.solution;
    for (std::size_t k = 0; k < problem.system.variables.size(); ++k) {
        solution.values.push_back(TriangularFuzzyNumber::from_sorted_triple(
            results[0].minimizer[k], results[1].minimizer[k], results[2].minimizer[k]));
    }
    solution.left = {results[0], objectives[0].residuals(results[0].minimizer)};
    solution.peak = {results[1], objectives[1].residuals(results[1].minimizer)};
    solution.right = {results[2], objectives[2].residuals(results[2].minimizer)};
    return report;
}

VerificationReport verify(const FuzzySolution& solution, const ProblemSpec& problem) {
    VerificationReport report;
    const Slice slices[3] = {Slice::Left, Slice::Peak, Slice::Right};
    for (Slice s : slices) {
        const SliceOutcome& outcome = solution.slice(s);
        const Objective objective(extract_slice(problem.system, s));

        const std::vector<double> recomputed = objective.residuals(outcome.search.minimizer);
        if (recomputed.size() != outcome.residuals.size()) {
            report.mismatches.push_back(
                {s, "residual count", recomputed.size(),
                 static_cast<double>(outcome.residuals.size()),
                 static_cast<double>(recomputed.size())});
            continue;
        }
        for (std::size_t k = 0; k < recomputed.size(); ++k) {
            if (!matches(outcome.residuals[k], recomputed[k])) {
                report.mismatches.push_back(
                    {s, "residual", k, outcome.residuals[k], recomputed[k]});
            }
        }
        const double objective_value = objective(outcome.search.minimizer);
        if (!matches(outcome.search.objective_value, objective_value)) {
            report.mismatches.push_back(
                {s, "objective", 0, outcome.search.objective_value, objective_value});
        }
    }
    for (std::size_t k = 0; k < solution.values.size(); ++k) {
        bool in_range = true;
        for (Slice s : slices) {
            const std::vector<double>& m = solution.slice(s).search.minimizer;
            if (k >= m.size()) {
                in_range = false;
                break;
            }
        }
        if (!in_range) {
            report.mismatches.push_back({Slice::Peak, "assembly dimension", k, 0.0, 0.0});
            continue;
        }
        const TriangularFuzzyNumber expected = TriangularFuzzyNumber::from_sorted_triple(
            solution.left.search.minimizer[k], solution.peak.search.minimizer[k],
            solution.right.search.minimizer[k]);
        if (!matches(expected.left(), solution.values[k].left()) ||
            !matches(expected.peak(), solution.values[k].peak()) ||
            !matches(expected.right(), solution.values[k].right())) {
            report.mismatches.push_back(
                {Slice::Peak, "assembly", k, solution.values[k].peak(), expected.peak()});
        }
    }
    return report;
}

std::vector<std::pair<double, double>> membership_samples(const FuzzySolution& solution,
                                                          std::size_t variable, int npoints) {
    if (variable >= solution.values.size()) {
        throw std::out_of_range("membership_samples: variable index out of range");
    }
    if (npoints < 2) {
        throw std::invalid_argument("membership_samples requires npoints >= 2");
    }
    const TriangularFuzzyNumber& tfn = solution.values[variable];
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(npoints));
    const double width = tfn.right() - tfn.left();
    for (int j = 0; j < npoints; ++j) {
        double x;
        if (j == 0) {
            x = tfn.left();
        } else if (j == npoints - 1) {
            x = tfn.right();
        } else {
            x = tfn.left() + width * (static_cast<double>(j) / (npoints - 1));
        }
        out.emplace_back(x, membership(tfn, x));
    }
    return out;
}

} // namespace iods
