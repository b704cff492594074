#include "vartraj/frenet.hpp"

#include <cmath>

#include "vartraj/errors.hpp"
#include "vartraj/lie_core.hpp"
#include "vartraj/numerics.hpp"

namespace vartraj::frenet {

namespace {

constexpr double kKappaMin = 1e-8;

// Quadratic extrapolation of f to s[i] from the nodes {a, a+1, a+2}.
double extrapolate3(const Eigen::VectorXd& s, const Eigen::VectorXd& f, Eigen::Index a,
                    Eigen::Index i) {
  const double x = s[i];
  double out = 0.0;
  for (Eigen::Index k = a; k < a + 3; ++k) {
    double w = 1.0;
    for (Eigen::Index l = a; l < a + 3; ++l) {
      if (l == k) continue;
      w *= (x - s[l]) / (s[k] - s[l]);
    }
    out += w * f[k];
  }
  return out;
}

std::vector<Eigen::Matrix3d> frame_derivative(const Eigen::VectorXd& s,
                                              const std::vector<Eigen::Matrix3d>& R) {
  const Eigen::Index n = s.size();
  Eigen::MatrixXd flat(n, 9);
  for (Eigen::Index i = 0; i < n; ++i)
    flat.row(i) = Eigen::Map<const Eigen::Matrix<double, 1, 9>>(R[i].data());
  Eigen::MatrixXd dflat = fd_derivative(s, flat);
  std::vector<Eigen::Matrix3d> dR(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Matrix<double, 1, 9> row = dflat.row(i);
    dR[i] = Eigen::Map<const Eigen::Matrix3d>(row.data());
  }
  return dR;
}

// Body angular rate of a frame field in the stored parameter.
Eigen::MatrixXd body_rates(const FrameField& field) {
  const Eigen::Index n = field.curve.s.size();
  auto dR = frame_derivative(field.curve.s, field.R);
  Eigen::MatrixXd w(n, 3);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Matrix3d omega = field.R[i].transpose() * dR[i];
    omega = 0.5 * (omega - omega.transpose().eval());  // strip finite-difference symmetric error
    w.row(i) = lie::vee(omega).transpose();
  }
  return w;
}

}  // namespace

SampledCurve::SampledCurve(Eigen::VectorXd param, Eigen::MatrixXd points, bool arclength_flag)
    : s(std::move(param)), x(std::move(points)), arclength(arclength_flag) {
  if (s.size() != x.rows() || x.cols() != 3 || s.size() < 3)
    throw InvalidCurveError("SampledCurve: need >= 3 samples of 3D points");
  for (Eigen::Index i = 0; i + 1 < s.size(); ++i)
    if (!(s[i + 1] > s[i])) throw InvalidCurveError("SampledCurve: parameter not increasing");
}

Eigen::Matrix3d FrenetApparatus::frame(Eigen::Index i) const {
  Eigen::Matrix3d R;
  R.col(0) = tangent.row(i).transpose();
  R.col(1) = normal.row(i).transpose();
  R.col(2) = binormal.row(i).transpose();
  return R;
}

Eigen::Matrix3d roll_rotation(double theta) {
  Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
  const double c = std::cos(theta), s = std::sin(theta);
  R(1, 1) = c;
  R(1, 2) = -s;
  R(2, 1) = s;
  R(2, 2) = c;
  return R;
}

SampledCurve arclength_parametrize(const SampledCurve& curve) {
  const Eigen::Index n = curve.s.size();
  Eigen::VectorXd chord(n);
  chord[0] = 0.0;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double d = (curve.x.row(i + 1) - curve.x.row(i)).norm();
    if (!(d > 0.0)) throw InvalidCurveError("arclength_parametrize: repeated point at index " +
                                            std::to_string(i + 1));
    chord[i + 1] = chord[i] + d;
  }
  const double total = chord[n - 1];
  chord /= total;
  chord[n - 1] = 1.0;

  Eigen::VectorXd u = Eigen::VectorXd::LinSpaced(n, 0.0, 1.0);
  Eigen::MatrixXd pts(n, 3);
  for (Eigen::Index i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c) pts(i, c) = interp_cubic(chord, curve.x.col(c), u[i]);
  // Keep the measured endpoints exact.
  pts.row(0) = curve.x.row(0);
  pts.row(n - 1) = curve.x.row(n - 1);
  return SampledCurve(std::move(u), std::move(pts), true);
}

FrenetApparatus frenet_apparatus(const SampledCurve& curve) {
  if (!curve.arclength)
    throw InvalidCurveError("frenet_apparatus: curve must be arclength-parameterized");
  const Eigen::Index n = curve.s.size();

  Eigen::MatrixXd xp = fd_derivative(curve.s, curve.x);
  const double length = xp.rowwise().norm().mean();

  FrenetApparatus app;
  app.s = curve.s;
  app.length = length;
  app.tangent.resize(n, 3);
  for (Eigen::Index i = 0; i < n; ++i) app.tangent.row(i) = xp.row(i).normalized();

  Eigen::MatrixXd tp = fd_derivative(curve.s, app.tangent);
  app.curvature.resize(n);
  app.normal.resize(n, 3);
  app.binormal.resize(n, 3);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Vector3d t = app.tangent.row(i).transpose();
    Eigen::Vector3d dt = tp.row(i).transpose();
    dt -= dt.dot(t) * t;  // enforce t . n = 0 against finite-difference error
    const double kappa = dt.norm() / length;
    app.curvature[i] = kappa;
    if (kappa < kKappaMin) {
      if (i > 0 && i < n - 1)
        throw UndefinedNormalError("frenet_apparatus: curvature vanishes at interior sample " +
                                   std::to_string(i));
      // End sample: borrow the neighbour's normal below.
      app.normal.row(i).setZero();
      continue;
    }
    app.normal.row(i) = (dt / dt.norm()).transpose();
  }
  if (app.normal.row(0).isZero()) app.normal.row(0) = app.normal.row(1);
  if (app.normal.row(n - 1).isZero()) app.normal.row(n - 1) = app.normal.row(n - 2);

  // Differentiating derived fields leaves a short boundary layer (the stencil
  // changes from one-sided to centered); rebuild the outer normals and
  // curvatures from the clean interior.
  if (n >= 8) {
    for (int c = 0; c < 3; ++c) {
      for (Eigen::Index i : {Eigen::Index(0), Eigen::Index(1)})
        app.normal(i, c) = extrapolate3(curve.s, app.normal.col(c), 2, i);
      for (Eigen::Index i : {n - 2, n - 1})
        app.normal(i, c) = extrapolate3(curve.s, app.normal.col(c), n - 5, i);
    }
    for (Eigen::Index i : {Eigen::Index(0), Eigen::Index(1)})
      app.curvature[i] = std::max(extrapolate3(curve.s, app.curvature, 2, i), kKappaMin);
    for (Eigen::Index i : {n - 2, n - 1})
      app.curvature[i] = std::max(extrapolate3(curve.s, app.curvature, n - 5, i), kKappaMin);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Vector3d t = app.tangent.row(i).transpose();
    Eigen::Vector3d nn = app.normal.row(i).transpose();
    nn -= nn.dot(t) * t;
    nn.normalize();
    app.normal.row(i) = nn.transpose();
    app.binormal.row(i) = t.cross(nn).transpose();
  }

  Eigen::MatrixXd bp = fd_derivative(curve.s, app.binormal);
  app.torsion.resize(n);
  for (Eigen::Index i = 0; i < n; ++i)
    app.torsion[i] = -bp.row(i).dot(app.normal.row(i)) / length;
  if (n >= 8) {
    for (Eigen::Index i : {Eigen::Index(0), Eigen::Index(1)})
      app.torsion[i] = extrapolate3(curve.s, app.torsion, 2, i);
    for (Eigen::Index i : {n - 2, n - 1})
      app.torsion[i] = extrapolate3(curve.s, app.torsion, n - 5, i);
  }
  return app;
}

RollProfile minimal_twist(const FrenetApparatus& app, double theta0, std::optional<double> theta1) {
  // Cumulative integral of torsion in the stored parameter.
  Eigen::VectorXd tau_rate = app.torsion * app.length;
  Eigen::VectorXd psi = cumulative_trapezoid_corrected(app.s, tau_rate);
  const double span = app.s[app.s.size() - 1] - app.s[0];
  const double c2 = theta1 ? (*theta1 - theta0 + psi[psi.size() - 1]) / span : 0.0;

  RollProfile roll;
  roll.s = app.s;
  roll.theta = (theta0 + c2 * (app.s.array() - app.s[0]) - psi.array()).matrix();
  return roll;
}

FrameField frenet_frames(const SampledCurve& curve, const FrenetApparatus& app) {
  FrameField field;
  field.curve = curve;
  field.R.resize(curve.s.size());
  for (Eigen::Index i = 0; i < curve.s.size(); ++i) field.R[i] = app.frame(i);
  return field;
}

FrameField with_roll(const FrameField& field, const FrenetApparatus& app, const RollProfile& roll) {
  if (roll.s.size() != field.curve.s.size())
    throw InvalidInputError("with_roll: roll profile grid mismatch");
  (void)app;
  FrameField out = field;
  for (Eigen::Index i = 0; i < field.curve.s.size(); ++i)
    out.R[i] = field.R[i] * roll_rotation(roll.theta[i]);
  out.roll = roll;
  return out;
}

double frame_cost(const FrameField& field) {
  Eigen::MatrixXd w = body_rates(field);
  Eigen::VectorXd integrand = w.rowwise().squaredNorm();
  return trapezoid(field.curve.s, integrand);
}

reparam::MonotoneMap reparam_frames(const FrameField& field, double r) {
  Eigen::MatrixXd xp = fd_derivative(field.curve.s, field.curve.x);
  Eigen::MatrixXd w = body_rates(field);
  Eigen::VectorXd m = (r * r) * w.rowwise().squaredNorm() + xp.rowwise().squaredNorm();
  auto density = reparam::ScalarDensity::from_samples(field.curve.s, m);
  return reparam::solve_reparam(density, static_cast<int>(field.curve.s.size()) - 1);
}

JointResult joint_roll_reparam(const SampledCurve& input, double r, double theta0, double theta1) {
  SampledCurve curve = input.arclength ? input : arclength_parametrize(input);
  FrenetApparatus app = frenet_apparatus(curve);
  const double L = app.length;
  const Eigen::Index n = curve.s.size();

  // Residual density after the roll term is annihilated.
  Eigen::VectorXd m = (r * r * L * L) * app.curvature.array().square() + L * L;
  auto density = reparam::ScalarDensity::from_samples(curve.s, m);
  reparam::MonotoneMap s_map = reparam::solve_reparam(density, static_cast<int>(n) - 1);

  // theta*(t) = a t + theta0 - psi(s*(t)), a from the end condition.
  Eigen::VectorXd tau_rate = app.torsion * L;
  Eigen::VectorXd psi = cumulative_trapezoid_corrected(curve.s, tau_rate);
  const double a = theta1 - theta0 + psi[n - 1];

  RollProfile roll;
  roll.s = s_map.grid();
  roll.theta.resize(n);
  Eigen::MatrixXd pts(n, 3);
  std::vector<Eigen::Matrix3d> frames(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = s_map.grid()[i];
    const double sv = s_map.values()[i];
    roll.theta[i] = a * t + theta0 - interp_cubic(curve.s, psi, sv);

    for (int c = 0; c < 3; ++c) pts(i, c) = interp_cubic(curve.s, curve.x.col(c), sv);

    // Frenet frame at s* by geodesic interpolation between bracketing nodes.
    const auto* begin = curve.s.data();
    Eigen::Index j = std::upper_bound(begin, begin + n, sv) - begin - 1;
    if (j < 0) j = 0;
    if (j > n - 2) j = n - 2;
    const double alpha = (sv - curve.s[j]) / (curve.s[j + 1] - curve.s[j]);
    Eigen::Matrix3d Rfs = lie::geodesic_so3(app.frame(j), app.frame(j + 1), alpha);
    frames[i] = Rfs * roll_rotation(roll.theta[i]);
  }
  roll.theta[n - 1] = theta1;  // a is constructed so this holds; pin it exactly

  FrameField field;
  field.curve = SampledCurve(s_map.grid(), std::move(pts), false);
  field.R = std::move(frames);
  field.roll = roll;
  return {std::move(s_map), std::move(roll), std::move(field)};
}

}  // namespace vartraj::frenet
