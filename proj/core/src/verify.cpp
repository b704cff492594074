#include "vartraj/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "vartraj/errors.hpp"
#include "vartraj/numerics.hpp"

namespace vartraj::verify {

namespace {

// Segment-midpoint kinetic energies 2T along a trajectory.
Eigen::VectorXd segment_energies(const MetricRule& M, const Trajectory& traj) {
  const Eigen::Index n = traj.samples();
  Eigen::VectorXd e(n - 1);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double dt = traj.t[i + 1] - traj.t[i];
    const Eigen::VectorXd qdot = (traj.q.row(i + 1) - traj.q.row(i)).transpose() / dt;
    const Eigen::VectorXd qmid = 0.5 * (traj.q.row(i) + traj.q.row(i + 1)).transpose();
    e[i] = qdot.dot(M(qmid) * qdot);
  }
  return e;
}

// Random monotone bijection of [0,1]: normalized cumulative sum of a
// positive random spline-like profile.
Eigen::VectorXd random_monotone_map(const Eigen::VectorXd& u, const PerturbationBasis& basis,
                                    std::uint64_t trial) {
  std::mt19937_64 rng(mix_seed(basis.seed, trial));
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const int modes = std::max(1, basis.modes);
  Eigen::VectorXd coeff(modes);
  for (int k = 0; k < modes; ++k) coeff[k] = unif(rng);

  const Eigen::Index n = u.size();
  Eigen::VectorXd w(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double s = 0.0;
    for (int k = 0; k < modes; ++k) s += coeff[k] / (k + 1) * std::sin((k + 1) * M_PI * u[i]);
    w[i] = std::exp(2.0 * basis.amplitude * s);  // positive weight
  }
  Eigen::VectorXd tau = cumulative_trapezoid(u, w);
  tau /= tau[n - 1];
  tau[0] = 0.0;
  tau[n - 1] = 1.0;
  return tau;
}

}  // namespace

Eigen::MatrixXd sample_perturbation(const Eigen::VectorXd& t, Eigen::Index dim,
                                    const PerturbationBasis& basis, std::uint64_t trial) {
  std::mt19937_64 rng(mix_seed(basis.seed, trial));
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const int modes = std::max(1, basis.modes);
  const Eigen::Index n = t.size();
  const double t0 = t[0], span = t[n - 1] - t[0];

  Eigen::MatrixXd eps = Eigen::MatrixXd::Zero(n, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (int k = 1; k <= modes; ++k) {
      const double a = basis.amplitude * unif(rng) / k;
      for (Eigen::Index i = 1; i + 1 < n; ++i)
        eps(i, c) += a * std::sin(k * M_PI * (t[i] - t0) / span);
    }
  }
  // rows 0 and n-1 stay exactly zero
  return eps;
}

OptimalityReport perturbation_test(const CostFunction& cost, const Trajectory& candidate,
                                   const PerturbationBasis& basis, int trials, double tol) {
  OptimalityReport report;
  report.tol = tol;
  report.trials = trials;
  report.candidate_cost = cost(candidate);
  report.min_perturbed = std::numeric_limits<double>::infinity();

  double sum = 0.0;
  int evaluated = 0;
  for (int trial = 0; trial < trials; ++trial) {
    PerturbationBasis b = basis;
    bool done = false;
    for (int attempt = 0; attempt <= 5 && !done; ++attempt) {
      const std::uint64_t stream = static_cast<std::uint64_t>(trial) * 16 + attempt;
      Eigen::MatrixXd eps = sample_perturbation(candidate.t, candidate.dim(), b, stream);
      try {
        Trajectory perturbed(candidate.t, candidate.q + eps);
        const double c = cost(perturbed);
        sum += c;
        ++evaluated;
        report.min_perturbed = std::min(report.min_perturbed, c);
        report.worst_margin = std::max(report.worst_margin, report.candidate_cost - c);
        if (c < report.candidate_cost - tol) ++report.violations;
        done = true;
      } catch (const Error&) {
        ++report.domain_retries;
        b.amplitude *= 0.5;
      }
    }
    if (!done) ++report.failed_trials;
  }
  report.mean_perturbed = evaluated > 0 ? sum / evaluated : 0.0;
  return report;
}

OptimalityReport reparam_worsens_test(const MetricRule& M, const Trajectory& candidate,
                                      const PerturbationBasis& basis, int trials, double tol) {
  Eigen::VectorXd energies = segment_energies(M, candidate);
  const double mean = energies.mean();
  if (!(mean > 0.0) ||
      (energies.maxCoeff() - energies.minCoeff()) > 0.01 * mean)
    throw InvalidInputError(
        "reparam_worsens_test: candidate integrand is not constant (not energy-conserving)");

  const Eigen::Index n = candidate.samples();
  const double t0 = candidate.t[0], span = candidate.span();
  Eigen::VectorXd u(n);
  for (Eigen::Index i = 0; i < n; ++i) u[i] = (candidate.t[i] - t0) / span;

  auto energy_cost = [&](const Trajectory& traj) {
    Eigen::VectorXd e = segment_energies(M, traj);
    double s = 0.0;
    for (Eigen::Index i = 0; i + 1 < traj.samples(); ++i)
      s += e[i] * (traj.t[i + 1] - traj.t[i]);
    return s;
  };

  OptimalityReport report;
  report.tol = tol;
  report.trials = trials;
  report.candidate_cost = energy_cost(candidate);
  report.min_perturbed = std::numeric_limits<double>::infinity();

  double sum = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Eigen::VectorXd tau = random_monotone_map(u, basis, trial);
    // Resample the candidate at tau(u): same trace, different clock.
    Eigen::MatrixXd qw(n, candidate.dim());
    for (Eigen::Index i = 0; i < n; ++i) {
      const double tq = t0 + span * tau[i];
      for (Eigen::Index c = 0; c < candidate.dim(); ++c)
        qw(i, c) = interp_cubic(candidate.t, candidate.q.col(c), tq);
    }
    Trajectory warped(candidate.t, std::move(qw));
    const double c = energy_cost(warped);
    sum += c;
    report.min_perturbed = std::min(report.min_perturbed, c);
    report.worst_margin = std::max(report.worst_margin, report.candidate_cost - c);
    if (c < report.candidate_cost - tol) ++report.violations;
  }
  report.mean_perturbed = trials > 0 ? sum / trials : 0.0;
  return report;
}

double conservation_check(const MetricRule& M, const Trajectory& traj) {
  return conservation_check(segment_energies(M, traj));
}

double conservation_check(const Eigen::VectorXd& energy_series) {
  if (energy_series.size() < 1) throw InvalidInputError("conservation_check: empty series");
  const double e0 = energy_series[0];
  if (!(std::abs(e0) > 0.0)) throw InvalidInputError("conservation_check: zero initial energy");
  return (energy_series.array() - e0).abs().maxCoeff() / std::abs(e0);
}

J1J2 j1_j2_relation(const MetricRule& M, const Trajectory& traj) {
  // Functionals of the time-normalized trajectory (the unit interval is
  // where j2 = j1^2 holds for energy-conserving extremals): j1 is invariant
  // under affine retiming, j2 picks up the span.
  Eigen::VectorXd e = segment_energies(M, traj);  // 2T per segment
  J1J2 out;
  for (Eigen::Index i = 0; i + 1 < traj.samples(); ++i) {
    const double dt = traj.t[i + 1] - traj.t[i];
    out.j1 += std::sqrt(std::max(0.0, e[i])) * dt;
    out.j2 += e[i] * dt;
  }
  out.j2 *= traj.span();
  out.gap = std::abs(out.j2 - out.j1 * out.j1);
  return out;
}

std::string format_report(const OptimalityReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "candidate_cost: " << r.candidate_cost << "\n"
     << "trials: " << r.trials << "\n"
     << "min_perturbed: " << r.min_perturbed << "\n"
     << "mean_perturbed: " << r.mean_perturbed << "\n"
     << "violations: " << r.violations << "\n"
     << "worst_margin: " << r.worst_margin << "\n"
     << "domain_retries: " << r.domain_retries << "\n"
     << "failed_trials: " << r.failed_trials << "\n"
     << "tol: " << r.tol << "\n";
  return os.str();
}

}  // namespace vartraj::verify
