#include <benchmark/benchmark.h>

#include <vector>

#include "iods/parse.hpp"
#include "iods/search.hpp"
#include "iods/slice.hpp"
#include "iods/solver.hpp"

namespace {

const char* kReferenceText =
    "vars: x1 x2\n"
    "eq: x1^2 + x2 = [2, 5, 8]\n"
    "eq: x1^2 + x2^2 = [3, 6, 9]\n"
    "init: 1 1\n"
    "step: 0.5 0.5\n"
    "eps: 0.001\n";

void BM_ParseProblem(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(iods::parse_problem(kReferenceText));
    }
}
BENCHMARK(BM_ParseProblem);

void BM_Membership(benchmark::State& state) {
    const iods::TriangularFuzzyNumber tfn(2.0, 5.0, 8.0);
    double x = 2.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(iods::membership(tfn, x));
        x += 0.0625;
        if (x > 8.0) {
            x = 2.0;
        }
    }
}
BENCHMARK(BM_Membership);

void BM_ObjectiveEvaluation(benchmark::State& state) {
    const iods::ProblemSpec problem = iods::parse_problem(kReferenceText);
    const iods::Objective objective(iods::extract_slice(problem.system, iods::Slice::Peak));
    const std::vector<double> x{1.8, 1.6};
    for (auto _ : state) {
        benchmark::DoNotOptimize(objective(x));
    }
}
BENCHMARK(BM_ObjectiveEvaluation);

void BM_MinimizeInnerSlice(benchmark::State& state) {
    const iods::ProblemSpec problem = iods::parse_problem(kReferenceText);
    const iods::Objective objective(iods::extract_slice(problem.system, iods::Slice::Peak));
    for (auto _ : state) {
        benchmark::DoNotOptimize(iods::minimize(objective, problem.config));
    }
}
BENCHMARK(BM_MinimizeInnerSlice);

void BM_SolveReferenceProblem(benchmark::State& state) {
    const iods::ProblemSpec problem = iods::parse_problem(kReferenceText);
    for (auto _ : state) {
        benchmark::DoNotOptimize(iods::solve(problem));
    }
}
BENCHMARK(BM_SolveReferenceProblem);

void BM_SolveReferenceProblemConcurrent(benchmark::State& state) {
    const iods::ProblemSpec problem = iods::parse_problem(kReferenceText);
    for (auto _ : state) {
        benchmark::DoNotOptimize(iods::solve(problem, iods::SliceExecution::Concurrent));
    }
}
BENCHMARK(BM_SolveReferenceProblemConcurrent);

void BM_GridOracle(benchmark::State& state) {
    const iods::ProblemSpec problem = iods::parse_problem(kReferenceText);
    const iods::Objective objective(iods::extract_slice(problem.system, iods::Slice::Left));
    const std::vector<double> lower{0.0, 0.0};
    const std::vector<double> upper{3.0, 3.0};
    const int points = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(iods::grid_minimize(objective, lower, upper, points));
    }
}
BENCHMARK(BM_GridOracle)->Arg(51)->Arg(101);

} // namespace

BENCHMARK_MAIN();
