#include <polykernel/analysis.hpp>
#include <polykernel/kernel.hpp>
#include <polykernel/solvers.hpp>

#include <benchmark/benchmark.h>

#include <cmath>

using namespace polykernel;

namespace {

PointSet nodes(int n) { return generate_nodes(NodeFamily::chebyshev, n, Box::unit(1)); }

Eigen::MatrixXd cos10(const PointSet& X)
{
    Eigen::MatrixXd y(static_cast<Eigen::Index>(X.size()), 1);
    for (std::size_t i = 0; i < X.size(); ++i)
        y(static_cast<Eigen::Index>(i), 0) = std::cos(10.0 * X.point(i)[0]);
    return y;
}

void BM_IndexSet(benchmark::State& state)
{
    const KernelParams params(1.0, static_cast<int>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_index_set(params));
}
BENCHMARK(BM_IndexSet)->Arg(5)->Arg(10)->Arg(20);

void BM_Vandermonde(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const IndexSet idx = enumerate_index_set(KernelParams(5.0, n + 5, 1));
    const PointSet grid = equispaced_grid(1000);
    for (auto _ : state)
        benchmark::DoNotOptimize(vandermonde(grid, idx));
}
BENCHMARK(BM_Vandermonde)->Arg(10)->Arg(30)->Arg(50);

void BM_BuildStable(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const PointSet X = nodes(n);
    const Eigen::MatrixXd y = cos10(X);
    const KernelParams params(5.0, n + 5, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_stable(X, y, params));
}
BENCHMARK(BM_BuildStable)->Arg(10)->Arg(30)->Arg(50);

void BM_SolveDirect(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const PointSet X = nodes(n);
    const Eigen::MatrixXd y = cos10(X);
    const KernelParams params(5.0, n + 5, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_direct(X, y, params));
}
BENCHMARK(BM_SolveDirect)->Arg(10)->Arg(15);

void BM_EvaluateStable(benchmark::State& state)
{
    const PointSet X = nodes(30);
    const StableInterpolant model = build_stable(X, cos10(X), KernelParams(5.0, 35, 1));
    const PointSet grid = equispaced_grid(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate(model, grid));
}
BENCHMARK(BM_EvaluateStable)->Arg(100)->Arg(1000);

void BM_LebesgueConstant(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const PointSet X = nodes(n);
    const PointSet grid = equispaced_grid(1000);
    for (auto _ : state)
        benchmark::DoNotOptimize(lebesgue_function(X, KernelParams(5.0, n + 1, 1), grid).constant);
}
BENCHMARK(BM_LebesgueConstant)->Arg(15)->Arg(45);

} // namespace

BENCHMARK_MAIN();
