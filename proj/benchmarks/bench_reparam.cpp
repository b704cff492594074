#include <benchmark/benchmark.h>

#include <cmath>

#include "vartraj/reparam1d.hpp"

using namespace vartraj::reparam;

static void SolveReparam(benchmark::State& state) {
  auto m = ScalarDensity::from_function([](double y) { return (1.0 + y) * (1.0 + y); });
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MonotoneMap map = solve_reparam(m, K);
    benchmark::DoNotOptimize(map.values().data());
  }
  state.SetComplexityN(K);
}
BENCHMARK(SolveReparam)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void PathCost(benchmark::State& state) {
  auto m = ScalarDensity::from_function(
      [](double y) { return 1.0 + 0.5 * std::cos(2.0 * M_PI * y); });
  MonotoneMap map = solve_reparam(m, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(path_cost(m, map));
}
BENCHMARK(PathCost)->Arg(256)->Arg(2048);

static void WarpTrajectory(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  Eigen::VectorXd t = Eigen::VectorXd::LinSpaced(K + 1, 0.0, 1.0);
  Eigen::MatrixXd X(K + 1, 2);
  for (int i = 0; i <= K; ++i) {
    const double u = t[i] * t[i] * (3 - 2 * t[i]);
    X.row(i) << std::sin(2 * M_PI * u), std::cos(3 * M_PI * u);
  }
  SampledPath path(t, X);
  for (auto _ : state) {
    WarpResult r = warp_trajectory(path);
    benchmark::DoNotOptimize(r.path.X.data());
  }
}
BENCHMARK(WarpTrajectory)->Arg(512);

BENCHMARK_MAIN();
