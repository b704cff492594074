#include <benchmark/benchmark.h>

#include <random>

#include "vartraj/lie_core.hpp"

using namespace vartraj::lie;

namespace {

Eigen::Matrix3d sample_rotation(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Eigen::Vector3d axis(unif(rng), unif(rng), unif(rng));
  return exp_so3(2.5 * unif(rng) * axis.normalized());
}

}  // namespace

static void ExpLogRoundTrip(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Eigen::Matrix3d R = sample_rotation(rng);
  for (auto _ : state) {
    Eigen::Vector3d w = log_so3(R);
    benchmark::DoNotOptimize(exp_so3(w));
  }
}
BENCHMARK(ExpLogRoundTrip);

static void GeodesicSo3(benchmark::State& state) {
  std::mt19937_64 rng(2);
  Eigen::Matrix3d R0 = sample_rotation(rng), R1 = sample_rotation(rng);
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-4;
    if (t > 1.0) t = 0.0;
    benchmark::DoNotOptimize(geodesic_so3(R0, R1, t));
  }
}
BENCHMARK(GeodesicSo3);

static void GeodesicSe3(benchmark::State& state) {
  std::mt19937_64 rng(3);
  PoseSE3 g0{sample_rotation(rng), Eigen::Vector3d(0.1, -0.7, 0.4)};
  PoseSE3 g1{sample_rotation(rng), Eigen::Vector3d(1.2, 0.3, -0.5)};
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-4;
    if (t > 1.0) t = 0.0;
    PoseSE3 g = geodesic_se3(g0, g1, t);
    benchmark::DoNotOptimize(g.t.data());
  }
}
BENCHMARK(GeodesicSe3);

BENCHMARK_MAIN();
