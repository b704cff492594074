#include <benchmark/benchmark.h>

#include "vartraj/trajectory.hpp"
#include "vartraj/verify.hpp"

using namespace vartraj;

static void PerturbationTrials(benchmark::State& state) {
  const int K = 256;
  Eigen::VectorXd t = Eigen::VectorXd::LinSpaced(K + 1, 0.0, 1.0);
  Eigen::MatrixXd q(K + 1, 2);
  for (int i = 0; i <= K; ++i) q.row(i) << t[i], 2.0 * t[i];
  Trajectory line(t, q);
  CostFunction cost = [](const Trajectory& traj) {
    double c = 0.0;
    for (Eigen::Index i = 0; i + 1 < traj.samples(); ++i)
      c += (traj.q.row(i + 1) - traj.q.row(i)).squaredNorm() / (traj.t[i + 1] - traj.t[i]);
    return c;
  };
  verify::PerturbationBasis basis;
  const int trials = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rep = verify::perturbation_test(cost, line, basis, trials);
    benchmark::DoNotOptimize(rep.violations);
  }
  state.SetItemsProcessed(state.iterations() * trials);
}
BENCHMARK(PerturbationTrials)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
