#include "vartraj/bootstrap.hpp"

#include <Eigen/Cholesky>

#include "vartraj/errors.hpp"

namespace vartraj::bootstrap {

namespace {

// Coupling averaged over a grid segment, for trapezoid-rule line integrals.
Eigen::MatrixXd segment_coupling(const CouplingMap& A, const Eigen::VectorXd& q0,
                                 const Eigen::VectorXd& q1) {
  return 0.5 * (A(q0) + A(q1));
}

}  // namespace

CouplingMap CouplingMap::zero(int theta_dim, int q_dim) {
  CouplingMap m(Kind::Zero, theta_dim, q_dim);
  m.A0_ = Eigen::MatrixXd::Zero(theta_dim, q_dim);
  return m;
}

CouplingMap CouplingMap::constant(Eigen::MatrixXd A0) {
  CouplingMap m(Kind::Constant, static_cast<int>(A0.rows()), static_cast<int>(A0.cols()));
  m.A0_ = std::move(A0);
  return m;
}

CouplingMap CouplingMap::single_column(std::function<Eigen::VectorXd(double)> a1, int theta_dim) {
  CouplingMap m(Kind::SingleColumn, theta_dim, 1);
  m.a1_ = std::move(a1);
  return m;
}

CouplingMap CouplingMap::general(std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> A,
                                 int theta_dim, int q_dim) {
  CouplingMap m(Kind::General, theta_dim, q_dim);
  m.general_ = std::move(A);
  return m;
}

Eigen::MatrixXd CouplingMap::operator()(const Eigen::VectorXd& q) const {
  if (q.size() != q_dim_)
    throw InvalidCouplingError("CouplingMap: q has dimension " + std::to_string(q.size()) +
                               ", expected " + std::to_string(q_dim_));
  switch (kind_) {
    case Kind::Zero:
    case Kind::Constant:
      return A0_;
    case Kind::SingleColumn: {
      Eigen::VectorXd col = a1_(q[0]);
      if (col.size() != theta_dim_)
        throw InvalidCouplingError("CouplingMap: a1(q) has wrong dimension");
      return col;
    }
    case Kind::General: {
      Eigen::MatrixXd A = general_(q);
      if (A.rows() != theta_dim_ || A.cols() != q_dim_)
        throw InvalidCouplingError("CouplingMap: A(q) has wrong shape");
      return A;
    }
  }
  throw InvalidCouplingError("CouplingMap: unknown kind");
}

WeightMatrix::WeightMatrix(Eigen::MatrixXd W) : W_(std::move(W)) {
  if (W_.rows() != W_.cols() || W_.rows() < 1)
    throw InvalidWeightError("WeightMatrix: not square");
  if ((W_ - W_.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw InvalidWeightError("WeightMatrix: not symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(W_);
  if (llt.info() != Eigen::Success)
    throw InvalidWeightError("WeightMatrix: not positive definite");
}

AugmentedTrajectory::AugmentedTrajectory(Eigen::VectorXd time, Eigen::MatrixXd qs,
                                         Eigen::MatrixXd thetas)
    : t(std::move(time)), q(std::move(qs)), theta(std::move(thetas)) {
  if (t.size() != q.rows() || t.size() != theta.rows() || t.size() < 2)
    throw InvalidInputError("AugmentedTrajectory: grid mismatch");
  for (Eigen::Index i = 0; i + 1 < t.size(); ++i)
    if (!(t[i + 1] > t[i]))
      throw InvalidInputError("AugmentedTrajectory: times not strictly increasing");
}

Eigen::MatrixXd lift_theta(const Trajectory& qstar, const CouplingMap& A,
                           const Eigen::VectorXd& b) {
  if (qstar.dim() != A.q_dim())
    throw InvalidCouplingError("lift_theta: coupling expects q of dimension " +
                               std::to_string(A.q_dim()));
  if (b.size() != A.theta_dim())
    throw InvalidCouplingError("lift_theta: initial value has wrong dimension");
  const Eigen::Index n = qstar.samples();
  Eigen::MatrixXd theta(n, A.theta_dim());
  theta.row(0) = b.transpose();
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const Eigen::VectorXd dq = (qstar.q.row(i + 1) - qstar.q.row(i)).transpose();
    const Eigen::MatrixXd Abar =
        segment_coupling(A, qstar.q.row(i).transpose(), qstar.q.row(i + 1).transpose());
    theta.row(i + 1) = theta.row(i) + (Abar * dq).transpose();
  }
  return theta;
}

Eigen::MatrixXd lift_theta_bvp(const Trajectory& qstar, const CouplingMap& A,
                               const Eigen::VectorXd& theta0, const Eigen::VectorXd& theta1) {
  if (A.kind() == CouplingMap::Kind::General && A.q_dim() > 1)
    throw UnsupportedCaseError(
        "lift_theta_bvp: general A(q) with dim q > 1 admits no constant-rate solution");
  if (theta0.size() != A.theta_dim() || theta1.size() != A.theta_dim())
    throw InvalidCouplingError("lift_theta_bvp: boundary values have wrong dimension");

  Eigen::MatrixXd particular = lift_theta(qstar, A, theta0);
  const Eigen::Index n = qstar.samples();
  const double span = qstar.span();
  const Eigen::VectorXd a =
      (theta1 - particular.row(n - 1).transpose()) / span;  // constant first-integral rate
  for (Eigen::Index i = 0; i < n; ++i)
    particular.row(i) += ((qstar.t[i] - qstar.t[0]) * a).transpose();
  return particular;
}

MetricRule composite_metric(const MetricRule& M, const CouplingMap& A, const WeightMatrix& W) {
  const int dq = A.q_dim();
  const int dth = A.theta_dim();
  Eigen::MatrixXd Wm = W.matrix();
  return [M, A, Wm, dq, dth](const Eigen::VectorXd& state) -> Eigen::MatrixXd {
    const Eigen::VectorXd q = state.head(dq);
    Eigen::MatrixXd Mq = M(q);
    if (Mq.rows() != dq || Mq.cols() != dq)
      throw InvalidMetricError("composite_metric: base metric has wrong shape");
    const Eigen::MatrixXd Aq = A(q);
    Eigen::MatrixXd out(dq + dth, dq + dth);
    out.topLeftCorner(dq, dq) = Mq + Aq.transpose() * Wm * Aq;
    out.topRightCorner(dq, dth) = -Aq.transpose() * Wm;
    out.bottomLeftCorner(dth, dq) = -Wm * Aq;
    out.bottomRightCorner(dth, dth) = Wm;
    return out;
  };
}

double coupling_penalty(const AugmentedTrajectory& traj, const CouplingMap& A,
                        const WeightMatrix& W) {
  const Eigen::Index n = traj.t.size();
  double penalty = 0.0;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double dt = traj.t[i + 1] - traj.t[i];
    const Eigen::VectorXd qdot = (traj.q.row(i + 1) - traj.q.row(i)).transpose() / dt;
    const Eigen::VectorXd thdot = (traj.theta.row(i + 1) - traj.theta.row(i)).transpose() / dt;
    const Eigen::MatrixXd Abar =
        segment_coupling(A, traj.q.row(i).transpose(), traj.q.row(i + 1).transpose());
    const Eigen::VectorXd r = thdot - Abar * qdot;
    penalty += 0.5 * r.dot(W.matrix() * r) * dt;
  }
  return penalty;
}

double augmented_cost(const CostFunction& f1_cost, const AugmentedTrajectory& traj,
                      const CouplingMap& A, const WeightMatrix& W) {
  return f1_cost(traj.q_part()) + coupling_penalty(traj, A, W);
}

}  // namespace vartraj::bootstrap
