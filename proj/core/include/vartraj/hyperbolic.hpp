#pragma once

#include <Eigen/Dense>
#include <vector>

#include "vartraj/trajectory.hpp"

namespace vartraj::hyperbolic {

// Parameters of the SL(2,R)-parameterized geodesic family of the half plane;
// requires ad - bc = 1 to 1e-12.
struct SL2Params {
  double a, b, c, d;
  SL2Params(double a_, double b_, double c_, double d_);
};

struct HalfPlanePath {
  Eigen::VectorXd t;
  Eigen::MatrixXd x;  // columns x1, x2; x2 > 0 everywhere

  HalfPlanePath() = default;
  HalfPlanePath(Eigen::VectorXd time, Eigen::MatrixXd points);
};

// Christoffel symbols, lowered Riemann tensor, and the constant-curvature
// fit at a point, all from central finite differences of the metric rule.
struct CurvatureReport {
  int dim = 0;
  std::vector<Eigen::MatrixXd> christoffel;  // christoffel[i](j,k) = Gamma^i_{jk}
  std::vector<double> riemann_lower;         // R_{hjkl}, strides d^3, d^2, d, 1
  double k0 = 0.0;                           // least-squares constant-curvature fit
  double max_residual = 0.0;                 // max |R_hjkl - k0 (m_hk m_jl - m_hl m_jk)|

  double riemann(int h, int j, int k, int l) const {
    return riemann_lower[((h * dim + j) * dim + k) * dim + l];
  }
};

CurvatureReport curvature_report(const MetricRule& M, const Eigen::VectorXd& q, double h);

// The explicit geodesic family: x1 = (bd + ac e^{2t}) / (d^2 + c^2 e^{2t}),
// x2 = e^t / (d^2 + c^2 e^{2t}). Unit hyperbolic speed; Euclidean curvature
// of the trace is -2cd.
Eigen::Vector2d geodesic_h2(const SL2Params& p, double t);
Eigen::Vector2d geodesic_h2_velocity(const SL2Params& p, double t);
Eigen::Vector2d geodesic_h2_accel(const SL2Params& p, double t);

HalfPlanePath sample_geodesic(const SL2Params& p, double t0, double t1, int K);

struct BvpResult {
  SL2Params params;
  double t0, t1;  // geodesic_h2(params, t0) = p0, (t1) = p1; length = t1 - t0
};

// Endpoint solver: circle (or vertical ray) through the endpoints orthogonal
// to the real axis, then parameter recovery. Rejects coincident points.
BvpResult geodesic_h2_bvp(const Eigen::Vector2d& p0, const Eigen::Vector2d& p1);

// Quadrature of int (x1'^2 + x2'^2) / x2^2 dt on the sampled path.
double hyperbolic_cost(const HalfPlanePath& path);

// Boundary-matched exponential ansatz x2 = x2(0) e^{c2 t}, x1 = alpha +
// beta e^{c2 t}; constant hyperbolic speed, suboptimal off vertical rays.
// Requires x2(0) != x2(1).
HalfPlanePath ansatz_h2(const Eigen::Vector2d& p0, const Eigen::Vector2d& p1, int K);

// Exact constant squared speed of the boundary-matched ansatz (= its cost
// on [0,1]).
double ansatz_energy(const Eigen::Vector2d& p0, const Eigen::Vector2d& p1);

struct SteeredAnsatz {
  HalfPlanePath path;
  double cost = 0.0;
  Eigen::Vector2d c = Eigen::Vector2d::Zero();  // constant vector of the construction
  bool converged = false;
};

// Ansatz with steering rotation theta(t) = omega0 t; (c1, c2) solved by
// Newton iteration so both endpoints match. omega0 = 0 reproduces the
// unsteered ansatz.
SteeredAnsatz ansatz_h2_steered(const Eigen::Vector2d& p0, const Eigen::Vector2d& p1,
                                double omega0, int K);

}  // namespace vartraj::hyperbolic
