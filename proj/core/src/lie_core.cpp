#include "vartraj/lie_core.hpp"

#include <cmath>

#include "vartraj/errors.hpp"

namespace vartraj::lie {

namespace {

constexpr double kSmallAngle = 1e-4;  // below this, use series for the Rodrigues factors
constexpr double kLogAngleTol = 1e-6;

// sin(x)/x and (1-cos(x))/x^2 with series fallbacks accurate to < 1e-12.
double sinc(double x) {
  if (std::abs(x) < kSmallAngle) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

double cosc(double x) {
  if (std::abs(x) < kSmallAngle) {
    const double x2 = x * x;
    return 0.5 - x2 / 24.0 + x2 * x2 / 720.0;
  }
  return (1.0 - std::cos(x)) / (x * x);
}

// (x - sin(x))/x^3, for the SE(3) left Jacobian.
double sinc3(double x) {
  if (std::abs(x) < kSmallAngle) {
    const double x2 = x * x;
    return 1.0 / 6.0 - x2 / 120.0 + x2 * x2 / 5040.0;
  }
  return (x - std::sin(x)) / (x * x * x);
}

// Left Jacobian of SO(3): exp_se3 translation factor.
Eigen::Matrix3d left_jacobian(const Eigen::Vector3d& w) {
  const double th = w.norm();
  const Eigen::Matrix3d W = hat(w);
  return Eigen::Matrix3d::Identity() + cosc(th) * W + sinc3(th) * W * W;
}

Eigen::Matrix3d left_jacobian_inv(const Eigen::Vector3d& w) {
  const double th = w.norm();
  const Eigen::Matrix3d W = hat(w);
  double coeff;
  if (th < kSmallAngle) {
    const double th2 = th * th;
    coeff = 1.0 / 12.0 + th2 / 720.0 + th2 * th2 / 30240.0;
  } else {
    coeff = (1.0 - 0.5 * th * std::sin(th) / (1.0 - std::cos(th))) / (th * th);
  }
  return Eigen::Matrix3d::Identity() - 0.5 * W + coeff * W * W;
}

}  // namespace

bool is_rotation(const Eigen::Matrix3d& R, double tol) {
  return (R.transpose() * R - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < tol &&
         R.determinant() > 0.0;
}

Eigen::Matrix3d project_rotation(const Eigen::Matrix3d& M) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d R = svd.matrixU() * svd.matrixV().transpose();
  if (R.determinant() < 0.0) {
    Eigen::Matrix3d D = Eigen::Matrix3d::Identity();
    D(2, 2) = -1.0;
    R = svd.matrixU() * D * svd.matrixV().transpose();
  }
  return R;
}

Eigen::Matrix3d hat(const Eigen::Vector3d& w) {
  Eigen::Matrix3d W;
  W << 0.0, -w[2], w[1],
       w[2], 0.0, -w[0],
      -w[1], w[0], 0.0;
  return W;
}

Eigen::Vector3d vee(const Eigen::Matrix3d& omega) {
  if ((omega + omega.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw InvalidInputError("vee: input is not skew-symmetric");
  return {omega(2, 1), omega(0, 2), omega(1, 0)};
}

Eigen::Matrix3d exp_so3(const Eigen::Vector3d& w) {
  const double th = w.norm();
  const Eigen::Matrix3d W = hat(w);
  return Eigen::Matrix3d::Identity() + sinc(th) * W + cosc(th) * W * W;
}

Eigen::Vector3d log_so3(const Eigen::Matrix3d& R) {
  double c = 0.5 * (R.trace() - 1.0);
  c = std::min(1.0, std::max(-1.0, c));
  const double th = std::acos(c);
  if (th >= M_PI - kLogAngleTol)
    throw AmbiguousLogarithmError("log_so3: rotation angle at or near pi");
  const Eigen::Matrix3d S = 0.5 * (R - R.transpose());
  const Eigen::Vector3d v{S(2, 1), S(0, 2), S(1, 0)};  // = sin(th) * axis
  if (th < kSmallAngle) {
    // v = sinc(th) * w; divide by the series.
    const double th2 = th * th;
    return v * (1.0 + th2 / 6.0 + 7.0 * th2 * th2 / 360.0);
  }
  return v * (th / std::sin(th));
}

Eigen::Matrix3d rotation_between(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  if (std::abs(a.norm() - 1.0) > 1e-9 || std::abs(b.norm() - 1.0) > 1e-9)
    throw InvalidInputError("rotation_between: inputs must be unit vectors");
  const Eigen::Vector3d axb = a.cross(b);
  const double n = axb.norm();
  if (n <= 1e-9) {
    // Identical directions: the formula's limit is the identity. Antipodal
    // directions admit no unique axis.
    if (a.dot(b) > 0.0) return Eigen::Matrix3d::Identity();
    throw DegeneratePairError("rotation_between: antipodal vectors have no unique rotation");
  }
  const Eigen::Matrix3d W = hat(axb);
  return Eigen::Matrix3d::Identity() + W + ((1.0 - a.dot(b)) / (n * n)) * W * W;
}

Eigen::Matrix3d geodesic_so3(const Eigen::Matrix3d& R0, const Eigen::Matrix3d& R1, double t) {
  return R0 * exp_so3(t * log_so3(R0.transpose() * R1));
}

Eigen::Vector3d sphere_geodesic(const Eigen::Vector3d& a, const Eigen::Vector3d& b, double t) {
  const Eigen::Matrix3d R = rotation_between(a, b);
  return exp_so3(t * log_so3(R)) * a;
}

PoseDirect compose(const PoseDirect& g1, const PoseDirect& g2) {
  return {g1.R * g2.R, g1.t + g2.t};
}

PoseDirect inverse(const PoseDirect& g) { return {g.R.transpose(), -g.t}; }

PoseSE3 compose(const PoseSE3& g1, const PoseSE3& g2) {
  return {g1.R * g2.R, g1.R * g2.t + g1.t};
}

PoseSE3 inverse(const PoseSE3& g) { return {g.R.transpose(), -(g.R.transpose() * g.t)}; }

PoseSE3 exp_se3(const Twist6& xi) {
  return {exp_so3(xi.angular), left_jacobian(xi.angular) * xi.linear};
}

Twist6 log_se3(const PoseSE3& g) {
  Twist6 xi;
  xi.angular = log_so3(g.R);
  xi.linear = left_jacobian_inv(xi.angular) * g.t;
  return xi;
}

PoseDirect geodesic_pose_direct(const PoseDirect& g0, const PoseDirect& g1, double t) {
  return {geodesic_so3(g0.R, g1.R, t), g0.t + t * (g1.t - g0.t)};
}

PoseSE3 geodesic_se3(const PoseSE3& g0, const PoseSE3& g1, double t) {
  Twist6 xi = log_se3(compose(inverse(g0), g1));
  xi.angular *= t;
  xi.linear *= t;
  return compose(g0, exp_se3(xi));
}

}  // namespace vartraj::lie
