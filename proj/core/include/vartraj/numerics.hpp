#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace vartraj {

// First derivative of sampled values on a (possibly nonuniform) strictly
// increasing grid. Three-point centered stencil in the interior, one-sided
// second-order stencils at the ends. Exact for quadratics.
Eigen::VectorXd fd_derivative(const Eigen::VectorXd& t, const Eigen::VectorXd& v);

// Columnwise version for vector-valued samples (rows = samples).
Eigen::MatrixXd fd_derivative(const Eigen::VectorXd& t, const Eigen::MatrixXd& v);

double trapezoid(const Eigen::VectorXd& t, const Eigen::VectorXd& v);
Eigen::VectorXd cumulative_trapezoid(const Eigen::VectorXd& t, const Eigen::VectorXd& v);

// Trapezoid with the Euler-Maclaurin endpoint-derivative correction,
// fourth-order for smooth integrands (derivatives from fd_derivative).
Eigen::VectorXd cumulative_trapezoid_corrected(const Eigen::VectorXd& t,
                                               const Eigen::VectorXd& v);

// Composite Simpson for callables, n subintervals (n rounded up to even).
double integrate_simpson(const std::function<double(double)>& f, double a, double b, int n);

// Monotone (shape-preserving) piecewise-cubic Hermite interpolant.
// Fritsch-Butland slopes: on each subinterval the interpolant stays between
// the data values, so positive samples give a positive interpolant and
// monotone samples give a monotone interpolant. Evaluation clamps to the
// grid range.
class PchipInterpolant {
 public:
  PchipInterpolant() = default;
  PchipInterpolant(Eigen::VectorXd x, Eigen::VectorXd y);

  double operator()(double xq) const;
  double derivative(double xq) const;

  const Eigen::VectorXd& grid() const { return x_; }
  const Eigen::VectorXd& values() const { return y_; }

 private:
  int find_interval(double xq) const;
  Eigen::VectorXd x_, y_, d_;
};

// Local cubic (4-point Lagrange) interpolation of sampled data; one-sided
// stencils near the boundary. Exact for cubics. Not shape-preserving.
double interp_cubic(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double xq);

// Bisection inverse of a continuous strictly increasing function on [lo, hi].
double invert_increasing(const std::function<double(double)>& f, double lo, double hi,
                         double target, double tol);

// Deterministic per-trial stream: splitmix64 over (seed, trial).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial);

}  // namespace vartraj
