#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>

#include "vartraj/numerics.hpp"

namespace vartraj::reparam {

// Positive weight m(.) on [0,1] defining the cost J(y) = int m(y) (y')^2 dx.
// Either a closed-form callable or a tabulated profile with monotone cubic
// interpolation. Queries outside [0,1] clamp to the boundary, so costs of
// slightly overshooting perturbed maps stay well defined.
class ScalarDensity {
 public:
  static ScalarDensity from_function(std::function<double(double)> m);
  static ScalarDensity from_samples(const Eigen::VectorXd& s, const Eigen::VectorXd& m);

  double operator()(double s) const;
  bool tabulated() const { return table_.has_value(); }
  // Grid size hint for quadrature (number of table nodes, 0 for callables).
  int nodes() const;

 private:
  ScalarDensity() = default;
  std::function<double(double)> fn_;
  std::optional<PchipInterpolant> table_;
};

// Discretized strictly increasing bijection of [0,1]. Evaluation between
// nodes uses the monotone cubic interpolant, so composition and inversion
// stay inside the class.
class MonotoneMap {
 public:
  MonotoneMap(Eigen::VectorXd x, Eigen::VectorXd y);

  static MonotoneMap identity(int K);

  double operator()(double xq) const { return interp_(xq); }
  double derivative(double xq) const { return interp_.derivative(xq); }

  const Eigen::VectorXd& grid() const { return x_; }
  const Eigen::VectorXd& values() const { return y_; }
  Eigen::Index nodes() const { return x_.size(); }

  MonotoneMap inverse() const;
  // f after g: x -> f(g(x)), sampled on g's grid.
  static MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

 private:
  Eigen::VectorXd x_, y_;
  PchipInterpolant interp_;
};

// Sampled trajectory in R^d against strictly increasing times.
struct SampledPath {
  Eigen::VectorXd t;
  Eigen::MatrixXd X;  // rows = samples

  SampledPath() = default;
  SampledPath(Eigen::VectorXd time, Eigen::MatrixXd points);
};

// Global minimizer of J(y) = int_0^1 m(y) (y')^2 dx over monotone bijections
// with y(0)=0, y(1)=1, returned on a uniform grid of K+1 nodes. Solves the
// first integral sqrt(m(y)) y' = c1, i.e. F(y(x)) = F(1) x with
// F(y) = int_0^y sqrt(m), inverted by bisection.
MonotoneMap solve_reparam(const ScalarDensity& m, int K);

// Quadrature of int m(y(x)) (y'(x))^2 dx on the map's grid (midpoint rule
// per segment, second order).
double path_cost(const ScalarDensity& m, const MonotoneMap& y);

// (int_0^1 sqrt(m))^2: value of J at the global minimizer, independent of
// the minimizer itself.
double optimal_cost(const ScalarDensity& m);

struct WarpResult {
  MonotoneMap map;       // tau*(t) on a uniform grid
  SampledPath path;      // X resampled at tau*(uniform grid)
};

// Constant-speed retiming of a sampled trajectory: solves the 1D problem
// with density m(tau) = |X'(tau)|^2, floored at 1e-6 of its mean so brief
// stationary segments do not break the solve.
WarpResult warp_trajectory(const SampledPath& X);

}  // namespace vartraj::reparam
