#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "iods/parse.hpp"
#include "iods/solver.hpp"
#include "support/random_systems.hpp"

using namespace iods;

namespace {

ProblemSpec reference_problem() {
    return parse_problem("vars: x1 x2\n"
                         "eq: x1^2 + x2 = [2, 5, 8]\n"
                         "eq: x1^2 + x2^2 = [3, 6, 9]\n"
                         "init: 1 1\n"
                         "step: 0.5 0.5\n"
                         "eps: 0.001\n");
}

bool same_result(const SearchResult& a, const SearchResult& b) {
    return a.minimizer == b.minimizer && a.objective_value == b.objective_value &&
           a.outer_iterations == b.outer_iterations && a.evaluations == b.evaluations &&
           a.converged == b.converged;
}

bool same_outcome(const SliceOutcome& a, const SliceOutcome& b) {
    return same_result(a.search, b.search) && a.residuals == b.residuals;
}

} // namespace

TEST_SUITE("solver") {

TEST_CASE("reference problem: objectives dominate the published point") {
    const SolverReport report = solve(reference_problem());
    CHECK(report.solution.left.search.objective_value <= 0.0452);
    CHECK(report.solution.peak.search.objective_value <= 1.4832);
    CHECK(report.solution.right.search.objective_value <= 9.5432);
    CHECK(report.solution.left.search.converged);
    CHECK(report.solution.peak.search.converged);
    CHECK(report.solution.right.search.converged);
    for (const TriangularFuzzyNumber& t : report.solution.values) {
        CHECK(t.left() <= t.peak());
        CHECK(t.peak() <= t.right());
    }
}

TEST_CASE("per-slice descent from the initial point") {
    const ProblemSpec problem = reference_problem();
    const SolverReport report = solve(problem);
    const Slice slices[3] = {Slice::Left, Slice::Peak, Slice::Right};
    for (Slice s : slices) {
        const Objective objective(extract_slice(problem.system, s));
        CHECK(report.solution.slice(s).search.objective_value <=
              objective(problem.config.initial_point));
    }
}

TEST_CASE("stored slice values recompute bit-exactly") {
    const ProblemSpec problem = reference_problem();
    const SolverReport report = solve(problem);
    const Slice slices[3] = {Slice::Left, Slice::Peak, Slice::Right};
    for (Slice s : slices) {
        const Objective objective(extract_slice(problem.system, s));
        const SliceOutcome& o = report.solution.slice(s);
        CHECK(objective(o.search.minimizer) == o.search.objective_value);
        CHECK(objective.residuals(o.search.minimizer) == o.residuals);
    }
}

TEST_CASE("an all-degenerate system collapses to one crisp solve") {
    const ProblemSpec problem = parse_problem("vars: x\neq: x = [4, 4, 4]\n");
    const SolverReport report = solve(problem);
    CHECK(same_outcome(report.solution.left, report.solution.peak));
    CHECK(same_outcome(report.solution.peak, report.solution.right));
    REQUIRE(report.solution.values.size() == 1);
    CHECK(report.solution.values[0].degenerate());
    CHECK(std::abs(report.solution.values[0].peak() - 4.0) <= 1e-3);
}

TEST_CASE("seeding near the root separates the three slices") {
    ProblemSpec problem = reference_problem();
    problem.config.initial_point = {1.8, 1.6};
    problem.config.step = {0.1, 0.1};
    problem.config.epsilon = 1e-8;
    const SolverReport report = solve(problem);

    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double targets[3] = {std::sqrt(2.0 - phi), std::sqrt(5.0 - phi), std::sqrt(8.0 - phi)};
    const Slice slices[3] = {Slice::Left, Slice::Peak, Slice::Right};
    for (int i = 0; i < 3; ++i) {
        const SliceOutcome& o = report.solution.slice(slices[i]);
        CHECK(o.search.objective_value <= 1e-6);
        CHECK(std::abs(o.search.minimizer[0] - targets[i]) <= 1e-2);
        CHECK(std::abs(o.search.minimizer[1] - phi) <= 1e-2);
    }
    // Every slice shares the same x2 root, so the assembled x2 is narrow.
    CHECK(report.solution.values[1].right() - report.solution.values[1].left() <= 1e-2);
}

TEST_CASE("sequential and concurrent slice execution match bit for bit") {
    const ProblemSpec problem = reference_problem();
    const SolverReport sequential = solve(problem, SliceExecution::Sequential);
    const SolverReport concurrent = solve(problem, SliceExecution::Concurrent);
    CHECK(same_outcome(sequential.solution.left, concurrent.solution.left));
    CHECK(same_outcome(sequential.solution.peak, concurrent.solution.peak));
    CHECK(same_outcome(sequential.solution.right, concurrent.solution.right));
    REQUIRE(sequential.solution.values.size() == concurrent.solution.values.size());
    for (std::size_t k = 0; k < sequential.solution.values.size(); ++k) {
        CHECK(sequential.solution.values[k] == concurrent.solution.values[k]);
    }
}

TEST_CASE("solve rejects invalid systems") {
    ProblemSpec problem;
    problem.system.variables = {"x"};
    problem.config.initial_point = {0.0};
    problem.config.step = {0.5};
    CHECK_THROWS_AS(solve(problem), ValidationError);
}

TEST_CASE("verify is clean on a fresh report and flags tampering") {
    const ProblemSpec problem = reference_problem();
    const SolverReport report = solve(problem);
    CHECK(verify(report.solution, problem).clean());

    FuzzySolution tampered = report.solution;
    tampered.peak.search.minimizer[0] += 0.1;
    CHECK_FALSE(verify(tampered, problem).clean());

    tampered = report.solution;
    tampered.left.residuals[1] += 1e-6;
    CHECK_FALSE(verify(tampered, problem).clean());

    tampered = report.solution;
    tampered.right.search.objective_value *= 2.0;
    tampered.right.search.objective_value += 1.0;
    CHECK_FALSE(verify(tampered, problem).clean());
}

TEST_CASE("verify reports residuals identical across slices for degenerate systems") {
    const ProblemSpec problem = parse_problem("vars: x\neq: x^2 = [9, 9, 9]\ninit: 1\n");
    const SolverReport report = solve(problem);
    CHECK(verify(report.solution, problem).clean());
    CHECK(report.solution.left.residuals == report.solution.right.residuals);
}

TEST_CASE("membership samples on the published solution triple") {
    FuzzySolution solution;
    solution.values.push_back(TriangularFuzzyNumber(0.6938, 1.7115, 2.3274));
    const auto rows = membership_samples(solution, 0, 3);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].first == 0.6938);
    CHECK(rows[0].second == 0.0);
    const double mid = 0.6938 + (2.3274 - 0.6938) * 0.5;
    CHECK(rows[1].first == mid);
    CHECK(std::abs(rows[1].second - (mid - 0.6938) / (1.7115 - 0.6938)) <= 1e-15);
    CHECK(std::abs(rows[1].second - 0.8026) <= 1e-4);
    CHECK(rows[2].first == 2.3274);
    CHECK(rows[2].second == 0.0);
}

TEST_CASE("membership samples on degenerate and symmetric numbers") {
    FuzzySolution solution;
    solution.values.push_back(TriangularFuzzyNumber(4.0, 4.0, 4.0));
    solution.values.push_back(TriangularFuzzyNumber(0.0, 1.0, 2.0));

    const auto flat = membership_samples(solution, 0, 2);
    REQUIRE(flat.size() == 2);
    CHECK(flat[0] == std::pair<double, double>{4.0, 1.0});
    CHECK(flat[1] == std::pair<double, double>{4.0, 1.0});

    const auto tri = membership_samples(solution, 1, 5);
    REQUIRE(tri.size() == 5);
    const double expected_mu[5] = {0.0, 0.5, 1.0, 0.5, 0.0};
    for (int i = 0; i < 5; ++i) {
        CHECK(tri[i].first == 0.5 * i);
        CHECK(tri[i].second == expected_mu[i]);
    }

    CHECK_THROWS_AS(membership_samples(solution, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(membership_samples(solution, 7, 3), std::out_of_range);
}

TEST_CASE("property: solve then verify round-trips on random systems") {
    std::mt19937_64 rng(0x5eed40);
    for (int i = 0; i < 25; ++i) {
        const ProblemSpec problem = testsupport::random_polynomial_problem(rng, false);
        const SolverReport report = solve(problem);
        CHECK(verify(report.solution, problem).clean());
        for (const TriangularFuzzyNumber& t : report.solution.values) {
            CHECK(t.left() <= t.peak());
            CHECK(t.peak() <= t.right());
        }
    }
}

} // TEST_SUITE
