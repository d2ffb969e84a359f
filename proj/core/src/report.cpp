#include "iods/report.hpp"

#include <cmath>
#include <cstddef>

#include <json.hpp>

#include "format_util.hpp"

namespace iods {

namespace {

using detail::format_full;
using detail::format_g6;

const Slice kSlices[3] = {Slice::Left, Slice::Peak, Slice::Right};

std::string join_g6(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += format_g6(values[i]);
    }
    return out;
}

} // namespace

std::string render_text_report(const SolverReport& report) {
    std::string out;
    out += "problem: " + std::to_string(report.variables.size()) + " variable(s), " +
           std::to_string(report.solution.left.residuals.size()) + " equation(s)\n\n";

    out += "solution\n";
    for (std::size_t k = 0; k < report.variables.size(); ++k) {
        const TriangularFuzzyNumber& t = report.solution.values[k];
        out += "  " + report.variables[k] + " = [" + format_g6(t.left()) + ", " +
               format_g6(t.peak()) + ", " + format_g6(t.right()) + "]\n";
    }

    out += "\nslice    objective     iterations  evaluations  converged\n";
    for (Slice s : kSlices) {
        const SearchResult& r = report.solution.slice(s).search;
        std::string label = to_label(s);
        label.resize(9, ' ');
        std::string objective = format_g6(r.objective_value);
        objective.resize(objective.size() < 14 ? 14 : objective.size(), ' ');
        std::string iterations = std::to_string(r.outer_iterations);
        iterations.resize(iterations.size() < 12 ? 12 : iterations.size(), ' ');
        std::string evaluations = std::to_string(r.evaluations);
        evaluations.resize(evaluations.size() < 13 ? 13 : evaluations.size(), ' ');
        out += label + objective + iterations + evaluations + (r.converged ? "yes" : "no") + "\n";
    }

    out += "\nminimizers\n";
    for (Slice s : kSlices) {
        const SliceOutcome& o = report.solution.slice(s);
        out += "  " + std::string(to_label(s)) + ": (" + join_g6(o.search.minimizer) + ")\n";
    }

    out += "\nresiduals\n";
    for (Slice s : kSlices) {
        const SliceOutcome& o = report.solution.slice(s);
        out += "  " + std::string(to_label(s)) + ": " + join_g6(o.residuals) + "\n";
    }

    out += "\nconfig: init = (" + join_g6(report.config.initial_point) + "), step = (" +
           join_g6(report.config.step) + "), eps = " + format_g6(report.config.epsilon) +
           ", reduction = " + format_g6(report.config.reduction_factor) +
           ", max_evals = " + std::to_string(report.config.max_evaluations) + "\n";
    out += "wall: " + format_g6(report.wall_ms) + " ms\n";
    return out;
}

std::string render_structured_report(const SolverReport& report) {
    nlohmann::json doc;
    doc["variables"] = report.variables;

    nlohmann::json solution = nlohmann::json::array();
    for (const TriangularFuzzyNumber& t : report.solution.values) {
        solution.push_back({t.left(), t.peak(), t.right()});
    }
    doc["solution"] = std::move(solution);

    nlohmann::json slices;
    for (Slice s : kSlices) {
        const SliceOutcome& o = report.solution.slice(s);
        nlohmann::json entry;
        entry["minimizer"] = o.search.minimizer;
        entry["objective"] = o.search.objective_value;
        entry["residuals"] = o.residuals;
        entry["iterations"] = o.search.outer_iterations;
        entry["evaluations"] = o.search.evaluations;
        entry["converged"] = o.search.converged;
        slices[to_label(s)] = std::move(entry);
    }
    doc["slices"] = std::move(slices);

    nlohmann::json config;
    config["init"] = report.config.initial_point;
    config["step"] = report.config.step;
    config["eps"] = report.config.epsilon;
    config["reduction"] = report.config.reduction_factor;
    config["max_evals"] = report.config.max_evaluations;
    doc["config"] = std::move(config);

    doc["wall_ms"] = report.wall_ms;
    return doc.dump(2) + "\n";
}

std::vector<std::pair<double, double>> membership_table(const FuzzySolution& solution,
                                                        std::size_t variable, int npoints) {
    std::vector<std::pair<double, double>> rows = membership_samples(solution, variable, npoints);
    const TriangularFuzzyNumber& tfn = solution.values[variable];
    // With the peak strictly inside the support and at least one interior
    // sample, snap the interior sample nearest the peak onto the peak so the
    // mu = 1 row is always present. Strict x ordering is preserved because
    // the nearest sample is within one spacing of the peak.
    if (npoints >= 3 && tfn.left() < tfn.peak() && tfn.peak() < tfn.right()) {
        std::size_t nearest = 1;
        double best = std::abs(rows[1].first - tfn.peak());
        for (std::size_t j = 2; j + 1 < rows.size(); ++j) {
            const double d = std::abs(rows[j].first - tfn.peak());
            if (d < best) {
                best = d;
                nearest = j;
            }
        }
        rows[nearest] = {tfn.peak(), 1.0};
    }
    return rows;
}

std::string render_membership_csv(const SolverReport& report, int npoints) {
    std::string out;
    for (std::size_t k = 0; k < report.variables.size(); ++k) {
        if (k > 0) {
            out += "\n";
        }
        out += "# variable: " + report.variables[k] + "\n";
        out += "x,mu\n";
        for (const auto& [x, mu] : membership_table(report.solution, k, npoints)) {
            out += format_full(x) + "," + format_full(mu) + "\n";
        }
    }
    return out;
}

} // namespace iods
