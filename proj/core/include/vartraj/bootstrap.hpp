#pragma once

#include <Eigen/Dense>
#include <functional>

#include "vartraj/trajectory.hpp"

namespace vartraj::bootstrap {

// Coupling rule A(q) of the augmented cost f1 + 1/2 |theta' - A(q) q'|^2_W.
// The kind tag makes the boundary-value case split explicit: constant A0
// and single-column a1(q) (dim q = 1) admit a free constant rate a that
// matches both theta endpoints; general A(q) does not.
class CouplingMap {
 public:
  enum class Kind { Zero, Constant, SingleColumn, General };

  static CouplingMap zero(int theta_dim, int q_dim);
  static CouplingMap constant(Eigen::MatrixXd A0);
  static CouplingMap single_column(std::function<Eigen::VectorXd(double)> a1, int theta_dim);
  static CouplingMap general(std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> A,
                             int theta_dim, int q_dim);

  Eigen::MatrixXd operator()(const Eigen::VectorXd& q) const;

  Kind kind() const { return kind_; }
  int theta_dim() const { return theta_dim_; }
  int q_dim() const { return q_dim_; }

 private:
  CouplingMap(Kind kind, int theta_dim, int q_dim) : kind_(kind), theta_dim_(theta_dim), q_dim_(q_dim) {}
  Kind kind_;
  int theta_dim_, q_dim_;
  Eigen::MatrixXd A0_;
  std::function<Eigen::VectorXd(double)> a1_;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> general_;
};

class WeightMatrix {
 public:
  explicit WeightMatrix(Eigen::MatrixXd W);  // requires symmetric positive definite
  const Eigen::MatrixXd& matrix() const { return W_; }
  int dim() const { return static_cast<int>(W_.rows()); }

 private:
  Eigen::MatrixXd W_;
};

struct AugmentedTrajectory {
  Eigen::VectorXd t;
  Eigen::MatrixXd q;      // rows = samples
  Eigen::MatrixXd theta;  // rows = samples

  AugmentedTrajectory(Eigen::VectorXd time, Eigen::MatrixXd qs, Eigen::MatrixXd thetas);
  Trajectory q_part() const { return Trajectory(t, q); }
};

// One-endpoint lift theta*(t) = b + int_0^t A(q*) dq*, computed with the
// trapezoid rule on the solution grid. The add-on cost of the lifted pair
// vanishes identically, so the augmented cost equals the base cost.
Eigen::MatrixXd lift_theta(const Trajectory& qstar, const CouplingMap& A, const Eigen::VectorXd& b);

// Both-endpoint lift for the constant-A0 and single-column cases:
// theta*(t) = a (t - t0) + theta0 + int A dq*, with a solved from theta1.
Eigen::MatrixXd lift_theta_bvp(const Trajectory& qstar, const CouplingMap& A,
                               const Eigen::VectorXd& theta0, const Eigen::VectorXd& theta1);

// Block metric of the augmented problem on [q; theta]:
//   [[M + A^T W A, -A^T W], [-W A, W]],
// whose quadratic form reproduces f1 + 1/2 |theta' - A q'|^2_W.
MetricRule composite_metric(const MetricRule& M, const CouplingMap& A, const WeightMatrix& W);

// The add-on integral 1/2 int |theta' - A(q) q'|^2_W dt alone (trapezoid in
// the coupling, segment slopes for the rates).
double coupling_penalty(const AugmentedTrajectory& traj, const CouplingMap& A,
                        const WeightMatrix& W);

// f2 along the trajectory: base functional evaluated on the q part plus the
// coupling penalty.
double augmented_cost(const CostFunction& f1_cost, const AugmentedTrajectory& traj,
                      const CouplingMap& A, const WeightMatrix& W);

}  // namespace vartraj::bootstrap
