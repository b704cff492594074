#include "vartraj/hyperbolic.hpp"

#include <cmath>
#include <complex>

#include "vartraj/errors.hpp"
#include "vartraj/numerics.hpp"

namespace vartraj::hyperbolic {

namespace {

Eigen::MatrixXd metric_at(const MetricRule& M, const Eigen::VectorXd& q) {
  Eigen::MatrixXd m = M(q);
  if (m.rows() != q.size() || m.cols() != q.size())
    throw InvalidMetricError("metric rule returned wrong shape");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw InvalidMetricError("metric not symmetric");
  return m;
}

// Christoffel symbols at q by central differences of the metric entries.
std::vector<Eigen::MatrixXd> christoffel_at(const MetricRule& M, const Eigen::VectorXd& q,
                                            double h) {
  const int d = static_cast<int>(q.size());
  Eigen::MatrixXd m = metric_at(M, q);
  Eigen::LDLT<Eigen::MatrixXd> ldlt(m);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
      ldlt.vectorD().minCoeff() <= 1e-12 * std::max(1.0, ldlt.vectorD().maxCoeff()))
    throw InvalidMetricError("metric singular or not positive definite at evaluation point");
  Eigen::MatrixXd minv = ldlt.solve(Eigen::MatrixXd::Identity(d, d));

  // dm[k](l,j) = d m_lj / d q_k
  std::vector<Eigen::MatrixXd> dm(d);
  for (int k = 0; k < d; ++k) {
    Eigen::VectorXd qp = q, qm = q;
    qp[k] += h;
    qm[k] -= h;
    dm[k] = (metric_at(M, qp) - metric_at(M, qm)) / (2.0 * h);
  }

  std::vector<Eigen::MatrixXd> gamma(d, Eigen::MatrixXd::Zero(d, d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        double s = 0.0;
        for (int l = 0; l < d; ++l)
          s += minv(i, l) * (dm[k](l, j) + dm[j](l, k) - dm[l](j, k));
        gamma[i](j, k) = 0.5 * s;
      }
  return gamma;
}

}  // namespace

SL2Params::SL2Params(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
  if (std::abs(a * d - b * c - 1.0) > 1e-12)
    throw InvalidInputError("SL2Params: ad - bc must equal 1");
}

HalfPlanePath::HalfPlanePath(Eigen::VectorXd time, Eigen::MatrixXd points)
    : t(std::move(time)), x(std::move(points)) {
  if (t.size() != x.rows() || x.cols() != 2 || t.size() < 2)
    throw InvalidInputError("HalfPlanePath: bad shape");
  for (Eigen::Index i = 0; i + 1 < t.size(); ++i)
    if (!(t[i + 1] > t[i])) throw InvalidInputError("HalfPlanePath: times not increasing");
  for (Eigen::Index i = 0; i < t.size(); ++i)
    if (!(x(i, 1) > 0.0)) throw InvalidInputError("HalfPlanePath: x2 must stay positive");
}

CurvatureReport curvature_report(const MetricRule& M, const Eigen::VectorXd& q, double h) {
  if (!(h > 0.0)) throw InvalidInputError("curvature_report: step must be positive");
  const int d = static_cast<int>(q.size());

  CurvatureReport report;
  report.dim = d;
  report.christoffel = christoffel_at(M, q, h);

  // dGamma[l][i](j,k) = d Gamma^i_{jk} / d q_l, central differences of the
  // (already finite-difference) Christoffels with the same step.
  std::vector<std::vector<Eigen::MatrixXd>> dgamma(d);
  for (int l = 0; l < d; ++l) {
    Eigen::VectorXd qp = q, qm = q;
    qp[l] += h;
    qm[l] -= h;
    auto gp = christoffel_at(M, qp, h);
    auto gm = christoffel_at(M, qm, h);
    dgamma[l].resize(d);
    for (int i = 0; i < d; ++i) dgamma[l][i] = (gp[i] - gm[i]) / (2.0 * h);
  }

  const auto& gamma = report.christoffel;
  // R^i_{jkl} = -d_l Gamma^i_{jk} + d_k Gamma^i_{jl}
  //             + sum_m (-Gamma^m_{jk} Gamma^i_{ml} + Gamma^m_{jl} Gamma^i_{mk})
  std::vector<double> upper(static_cast<std::size_t>(d) * d * d * d, 0.0);
  auto idx = [d](int i, int j, int k, int l) { return ((i * d + j) * d + k) * d + l; };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          double v = -dgamma[l][i](j, k) + dgamma[k][i](j, l);
          for (int m = 0; m < d; ++m)
            v += -gamma[m](j, k) * gamma[i](m, l) + gamma[m](j, l) * gamma[i](m, k);
          upper[idx(i, j, k, l)] = v;
        }

  Eigen::MatrixXd m = metric_at(M, q);
  report.riemann_lower.assign(upper.size(), 0.0);
  for (int hh = 0; hh < d; ++hh)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          double v = 0.0;
          for (int i = 0; i < d; ++i) v += m(hh, i) * upper[idx(i, j, k, l)];
          report.riemann_lower[idx(hh, j, k, l)] = v;
        }

  // Least-squares K0 over all components of R_hjkl = K0 (m_hk m_jl - m_hl m_jk).
  double num = 0.0, den = 0.0;
  for (int hh = 0; hh < d; ++hh)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          const double g = m(hh, k) * m(j, l) - m(hh, l) * m(j, k);
          num += report.riemann_lower[idx(hh, j, k, l)] * g;
          den += g * g;
        }
  report.k0 = (den > 0.0) ? num / den : 0.0;
  double worst = 0.0;
  for (int hh = 0; hh < d; ++hh)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          const double g = m(hh, k) * m(j, l) - m(hh, l) * m(j, k);
          worst = std::max(worst,
                           std::abs(report.riemann_lower[idx(hh, j, k, l)] - report.k0 * g));
        }
  report.max_residual = worst;
  return report;
}

Eigen::Vector2d geodesic_h2(const SL2Params& p, double t) {
  const double E = std::exp(2.0 * t);
  const double D = p.d * p.d + p.c * p.c * E;
  return {(p.b * p.d + p.a * p.c * E) / D, std::exp(t) / D};
}

Eigen::Vector2d geodesic_h2_velocity(const SL2Params& p, double t) {
  const double E = std::exp(2.0 * t);
  const double D = p.d * p.d + p.c * p.c * E;
  const double x1dot = 2.0 * p.c * p.d * E / (D * D);
  const double x2dot = std::exp(t) * (p.d * p.d - p.c * p.c * E) / (D * D);
  return {x1dot, x2dot};
}

Eigen::Vector2d geodesic_h2_accel(const SL2Params& p, double t) {
  const double E = std::exp(2.0 * t);
  const double D = p.d * p.d + p.c * p.c * E;
  const double cc = p.c * p.c;
  const double x1dd = 4.0 * p.c * p.d * E * (p.d * p.d - cc * E) / (D * D * D);
  const double et = std::exp(t);
  // d/dt [ e^t (d^2 - c^2 E) / D^2 ]
  const double x2dd =
      et * (p.d * p.d - cc * E) / (D * D) - 2.0 * et * cc * E / (D * D) -
      4.0 * et * (p.d * p.d - cc * E) * cc * E / (D * D * D);
  return {x1dd, x2dd};
}

HalfPlanePath sample_geodesic(const SL2Params& p, double t0, double t1, int K) {
  if (!(t1 > t0) || K < 2) throw InvalidInputError("sample_geodesic: bad interval or grid");
  Eigen::VectorXd ts = Eigen::VectorXd::LinSpaced(K + 1, t0, t1);
  Eigen::MatrixXd pts(K + 1, 2);
  for (int i = 0; i <= K; ++i) pts.row(i) = geodesic_h2(p, ts[i]).transpose();
  return HalfPlanePath(std::move(ts), std::move(pts));
}

BvpResult geodesic_h2_bvp(const Eigen::Vector2d& p0, const Eigen::Vector2d& p1) {
  if (!(p0[1] > 0.0) || !(p1[1] > 0.0))
    throw InvalidInputError("geodesic_h2_bvp: endpoints must have x2 > 0");
  if ((p1 - p0).norm() < 1e-14)
    throw DegeneratePairError("geodesic_h2_bvp: coincident endpoints");

  const double dx = p1[0] - p0[0];
  // Parameter of a point: e^t = Im-free part of i (d z - b) / (c z - a).
  auto param_of = [](const SL2Params& sp, const Eigen::Vector2d& pt) {
    const std::complex<double> z(pt[0], pt[1]);
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> w = i * (sp.d * z - sp.b) / (sp.c * z - sp.a);
    return std::log(w.real());
  };

  if (std::abs(dx) < 1e-12 * std::max(1.0, std::abs(p0[0]))) {
    // Vertical ray through x1 = u.
    const double u = 0.5 * (p0[0] + p1[0]);
    if (p1[1] > p0[1]) {
      SL2Params sp(1.0, u, 0.0, 1.0);  // x2 = e^t ascending
      return {sp, std::log(p0[1]), std::log(p1[1])};
    }
    SL2Params sp(u, -1.0, 1.0, 0.0);  // x2 = e^{-t} descending
    return {sp, -std::log(p0[1]), -std::log(p1[1])};
  }

  // Circle centered on the real axis through both points. The foot of the
  // circle near the endpoints suffers cancellation in x0 -+ r when the
  // center is far away (nearly vertical pairs); recover it from the
  // power-of-a-point identity (x - f_far)(x - f_near) = -v^2 instead.
  const double x0 = (p0.squaredNorm() - p1.squaredNorm()) / (2.0 * (p0[0] - p1[0]));
  const double r = std::hypot(p0[0] - x0, p0[1]);
  double f_right = x0 + r, f_left = x0 - r;
  if (std::abs(f_right - p0[0]) >= std::abs(f_left - p0[0]))
    f_left = p0[0] - p0[1] * p0[1] / (f_right - p0[0]);
  else
    f_right = p0[0] - p0[1] * p0[1] / (f_left - p0[0]);
  const double p_plus = (dx > 0.0) ? f_right : f_left;   // end of travel (t -> +inf)
  const double p_minus = (dx > 0.0) ? f_left : f_right;  // start of travel (t -> -inf)
  // a/c = p_plus, b/d = p_minus, ad - bc = 1.
  const double gd = 1.0 / (p_plus - p_minus);  // = gamma * delta
  const double gamma = std::sqrt(std::abs(gd));
  const double delta = gd / gamma;
  SL2Params sp(p_plus * gamma, p_minus * delta, gamma, delta);
  const double t0 = param_of(sp, p0);
  const double t1 = param_of(sp, p1);
  return {sp, t0, t1};
}

double hyperbolic_cost(const HalfPlanePath& path) {
  const Eigen::Index n = path.t.size();
  double cost = 0.0;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double dt = path.t[i + 1] - path.t[i];
    const double v1 = (path.x(i + 1, 0) - path.x(i, 0)) / dt;
    const double v2 = (path.x(i + 1, 1) - path.x(i, 1)) / dt;
    const double x2m = 0.5 * (path.x(i, 1) + path.x(i + 1, 1));
    cost += (v1 * v1 + v2 * v2) / (x2m * x2m) * dt;
  }
  return cost;
}

HalfPlanePath ansatz_h2(const Eigen::Vector2d& p0, const Eigen::Vector2d& p1, int K) {
  if (!(p0[1] > 0.0) || !(p1[1] > 0.0))
    throw InvalidInputError("ansatz_h2: endpoints must have x2 > 0");
  if (std::abs(p1[1] - p0[1]) < 1e-12 * std::max(p0[1], p1[1]))
    throw DegenerateAnsatzError("ansatz_h2: boundary-matched form requires x2(0) != x2(1)");
  const double c2 = std::log(p1[1] / p0[1]);
  const double k = (p1[0] - p0[0]) / (p1[1] - p0[1]);
  const double beta = p0[1] * k;
  const double alpha = p0[0] - beta;
  Eigen::VectorXd ts = Eigen::VectorXd::LinSpaced(K + 1, 0.0, 1.0);
  Eigen::MatrixXd pts(K + 1, 2);
  for (int i = 0; i <= K; ++i) {
    const double e = std::exp(c2 * ts[i]);
    pts(i, 0) = alpha + beta * e;
    pts(i, 1) = p0[1] * e;
  }
  return HalfPlanePath(std::move(ts), std::move(pts));
}

double ansatz_energy(const Eigen::Vector2d& p0, const Eigen::Vector2d& p1) {
  if (std::abs(p1[1] - p0[1]) < 1e-12 * std::max(p0[1], p1[1]))
    throw DegenerateAnsatzError("ansatz_energy: requires x2(0) != x2(1)");
  const double c2 = std::log(p1[1] / p0[1]);
  const double k = (p1[0] - p0[0]) / (p1[1] - p0[1]);
  return c2 * c2 * (1.0 + k * k);
}

SteeredAnsatz ansatz_h2_steered(const Eigen::Vector2d& p0, const Eigen::Vector2d& p1,
                                double omega0, int K) {
  if (K < 8) K = 8;
  // x' = x2 R(omega0 t) c; integrate with RK4 over [0,1].
  auto shoot = [&](const Eigen::Vector2d& c) {
    Eigen::MatrixXd pts(K + 1, 2);
    Eigen::Vector2d x = p0;
    pts.row(0) = x.transpose();
    const double h = 1.0 / K;
    auto rhs = [&](double t, const Eigen::Vector2d& xx) -> Eigen::Vector2d {
      const double th = omega0 * t;
      const double cc = std::cos(th), ss = std::sin(th);
      return {xx[1] * (cc * c[0] - ss * c[1]), xx[1] * (ss * c[0] + cc * c[1])};
    };
    for (int i = 0; i < K; ++i) {
      const double t = i * h;
      const Eigen::Vector2d k1 = rhs(t, x);
      const Eigen::Vector2d k2 = rhs(t + 0.5 * h, x + 0.5 * h * k1);
      const Eigen::Vector2d k3 = rhs(t + 0.5 * h, x + 0.5 * h * k2);
      const Eigen::Vector2d k4 = rhs(t + h, x + h * k3);
      x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      pts.row(i + 1) = x.transpose();
    }
    return pts;
  };

  // Initial guess from the unsteered closed form.
  Eigen::Vector2d c;
  if (std::abs(p1[1] - p0[1]) > 1e-12 * std::max(p0[1], p1[1])) {
    const double c2 = std::log(p1[1] / p0[1]);
    c = {c2 * (p1[0] - p0[0]) / (p1[1] - p0[1]), c2};
  } else {
    c = {(p1[0] - p0[0]) / p0[1], 0.0};
  }

  SteeredAnsatz out;
  Eigen::MatrixXd pts;
  for (int iter = 0; iter < 50; ++iter) {
    pts = shoot(c);
    const Eigen::Vector2d res = pts.row(K).transpose() - p1;
    if (res.norm() < 1e-10) {
      out.converged = true;
      break;
    }
    // Newton step with finite-difference Jacobian.
    Eigen::Matrix2d J;
    const double eps = 1e-7 * std::max(1.0, c.norm());
    for (int k = 0; k < 2; ++k) {
      Eigen::Vector2d cp = c;
      cp[k] += eps;
      J.col(k) = (shoot(cp).row(K).transpose() - p1 - res) / eps;
    }
    c -= J.fullPivLu().solve(res);
  }
  out.c = c;
  out.cost = c.squaredNorm();  // hyperbolic speed is |c|, constant
  Eigen::VectorXd ts = Eigen::VectorXd::LinSpaced(K + 1, 0.0, 1.0);
  out.path = HalfPlanePath(std::move(ts), std::move(pts));
  return out;
}

}  // namespace vartraj::hyperbolic
