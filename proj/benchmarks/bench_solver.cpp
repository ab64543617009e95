#include "mdsl/eigen.hpp"
#include "mdsl/fd_oracle.hpp"
#include "mdsl/fundamental.hpp"
#include "mdsl/hilbert.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

using namespace mdsl;

namespace {

ValidatedProblem coupled() {
    ProblemSpec s;
    s.a = 0.0;
    s.b = std::numbers::pi;
    s.epsilon = std::numbers::pi / 6;
    s.left_bc = {1, 1};
    s.right_bc = {1, 1, -1, 1};
    s.t_left = {1.0, 0.5, -0.2, 1.1};
    s.t_right = {0.8, 0.3, 0.1, 1.5};
    s.potential = PiecewisePotential::uniform([](double x) { return std::cos(2 * x); });
    return validate(s);
}

void BM_Omega(benchmark::State& state) {
    const ValidatedProblem p = coupled();
    const double lambda = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(omega(p, lambda));
}
BENCHMARK(BM_Omega)->Arg(1)->Arg(100)->Arg(10000);

void BM_Eigenvalues(benchmark::State& state) {
    const ValidatedProblem p = coupled();
    EigenOptions o;
    o.lambda_max = static_cast<double>(state.range(0));
    o.build_eigenfunctions = false;
    for (auto _ : state) benchmark::DoNotOptimize(find_eigenvalues(p, o));
}
BENCHMARK(BM_Eigenvalues)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Eigenpairs(benchmark::State& state) {
    const ValidatedProblem p = coupled();
    EigenOptions o;
    o.lambda_max = 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(find_eigenvalues(p, o));
}
BENCHMARK(BM_Eigenpairs)->Unit(benchmark::kMillisecond);

void BM_Resolve(benchmark::State& state) {
    const ValidatedProblem p = coupled();
    const HVector f = sample(p, [](double x) { return std::sin(x); }, 0.3,
                             static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(resolve(p, -3.5, f));
}
BENCHMARK(BM_Resolve)->Arg(201)->Arg(2001)->Unit(benchmark::kMillisecond);

void BM_PencilBuild(benchmark::State& state) {
    const ValidatedProblem p = coupled();
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(oracle::build_pencil(p, m));
}
BENCHMARK(BM_PencilBuild)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_PencilEigenvalues(benchmark::State& state) {
    const ValidatedProblem p = coupled();
    const oracle::PencilSystem pencil = oracle::build_pencil(p, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_eigenvalues(pencil, 8));
}
BENCHMARK(BM_PencilEigenvalues)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
