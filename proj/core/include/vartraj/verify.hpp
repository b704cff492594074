#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "vartraj/trajectory.hpp"

namespace vartraj::verify {

// Zero-endpoint sine perturbations eps(t) = sum_k a_k sin(k pi u), u the
// normalized time. Endpoints are pinned to exactly zero.
struct PerturbationBasis {
  int modes = 8;
  double amplitude = 0.05;
  std::uint64_t seed = 0;
};

struct OptimalityReport {
  double candidate_cost = 0.0;
  double min_perturbed = 0.0;
  double mean_perturbed = 0.0;
  int trials = 0;
  int violations = 0;        // perturbed < candidate - tol
  double worst_margin = 0.0; // max over trials of candidate - perturbed (positive = violation)
  int domain_retries = 0;    // cost evaluations rejected and re-drawn at half amplitude
  int failed_trials = 0;     // trials abandoned after the retry budget
  double tol = 0.0;
};

// One perturbation sample, deterministic in (basis.seed, trial).
Eigen::MatrixXd sample_perturbation(const Eigen::VectorXd& t, Eigen::Index dim,
                                    const PerturbationBasis& basis, std::uint64_t trial);

// Falsification harness: adds random zero-endpoint perturbations to the
// candidate and counts cost decreases. Cost evaluations that throw (domain
// violations such as leaving the half plane) are re-drawn with halved
// amplitude, at most 5 times per trial.
OptimalityReport perturbation_test(const CostFunction& cost, const Trajectory& candidate,
                                   const PerturbationBasis& basis, int trials,
                                   double tol = 1e-10);

// Random monotone retimings of an energy-conserving candidate never lower
// the energy cost int q'^T M(q) q' dt. Requires the candidate's integrand to
// be constant to 1% (else the premise does not apply and an error is thrown).
OptimalityReport reparam_worsens_test(const MetricRule& M, const Trajectory& candidate,
                                      const PerturbationBasis& basis, int trials,
                                      double tol = 1e-10);

// Relative drift max |T - T(0)| / T(0) of the kinetic energy along the
// trajectory, segment-midpoint evaluation.
double conservation_check(const MetricRule& M, const Trajectory& traj);
double conservation_check(const Eigen::VectorXd& energy_series);

struct J1J2 {
  double j1 = 0.0;   // int sqrt(2T) dt
  double j2 = 0.0;   // int 2T dt
  double gap = 0.0;  // |j2 - j1^2|
};

// For energy-conserving extremals j2 = j1^2; in general Cauchy-Schwarz gives
// j1^2 <= j2 * span.
J1J2 j1_j2_relation(const MetricRule& M, const Trajectory& traj);

std::string format_report(const OptimalityReport& r);

}  // namespace vartraj::verify
