#include <benchmark/benchmark.h>

#include <cmath>

#include "vartraj/frenet.hpp"

using namespace vartraj::frenet;

namespace {

SampledCurve helix(int K) {
  const double c = std::sqrt(2.0);
  Eigen::VectorXd s = Eigen::VectorXd::LinSpaced(K + 1, 0.0, 1.0);
  Eigen::MatrixXd x(K + 1, 3);
  for (int i = 0; i <= K; ++i)
    x.row(i) << std::cos(s[i] / c), std::sin(s[i] / c), s[i] / c;
  return SampledCurve(std::move(s), std::move(x), true);
}

}  // namespace

static void FrenetApparatusBench(benchmark::State& state) {
  SampledCurve curve = helix(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    FrenetApparatus app = frenet_apparatus(curve);
    benchmark::DoNotOptimize(app.torsion.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(FrenetApparatusBench)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

static void JointRollReparam(benchmark::State& state) {
  SampledCurve curve = helix(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    JointResult jr = joint_roll_reparam(curve, 1.0, 0.0, 0.5);
    benchmark::DoNotOptimize(jr.roll.theta.data());
  }
}
BENCHMARK(JointRollReparam)->Arg(512)->Arg(2048);

BENCHMARK_MAIN();
