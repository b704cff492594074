#include "support/fixtures.hpp"

#include <cmath>

#include "vartraj/lie_core.hpp"

namespace fixtures {

using vartraj::frenet::SampledCurve;

SampledCurve helix_curve(int K) {
  const double c = std::sqrt(2.0);
  Eigen::VectorXd s = Eigen::VectorXd::LinSpaced(K + 1, 0.0, 1.0);
  Eigen::MatrixXd x(K + 1, 3);
  for (int i = 0; i <= K; ++i) {
    x(i, 0) = std::cos(s[i] / c);
    x(i, 1) = std::sin(s[i] / c);
    x(i, 2) = s[i] / c;
  }
  return SampledCurve(std::move(s), std::move(x), true);
}

SampledCurve curve_from_profiles(const std::function<double(double)>& kappa,
                                 const std::function<double(double)>& tau, int K) {
  // State: rotation R (frame columns [t,n,b]) and position x.
  // R' = R hat(omega_fs), omega_fs = (tau, 0, kappa); x' = R e1.
  Eigen::VectorXd s = Eigen::VectorXd::LinSpaced(K + 1, 0.0, 1.0);
  Eigen::MatrixXd pts(K + 1, 3);
  Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  pts.row(0) = x.transpose();
  const double h = 1.0 / K;

  auto omega = [&](double sv) { return Eigen::Vector3d(tau(sv), 0.0, kappa(sv)); };

  for (int i = 0; i < K; ++i) {
    const double s0 = s[i];
    const Eigen::Matrix3d k1R = R * vartraj::lie::hat(omega(s0));
    const Eigen::Vector3d k1x = R.col(0);
    const Eigen::Matrix3d R2 = R + 0.5 * h * k1R;
    const Eigen::Matrix3d k2R = R2 * vartraj::lie::hat(omega(s0 + 0.5 * h));
    const Eigen::Vector3d k2x = R2.col(0);
    const Eigen::Matrix3d R3 = R + 0.5 * h * k2R;
    const Eigen::Matrix3d k3R = R3 * vartraj::lie::hat(omega(s0 + 0.5 * h));
    const Eigen::Vector3d k3x = R3.col(0);
    const Eigen::Matrix3d R4 = R + h * k3R;
    const Eigen::Matrix3d k4R = R4 * vartraj::lie::hat(omega(s0 + h));
    const Eigen::Vector3d k4x = R4.col(0);

    R += h / 6.0 * (k1R + 2.0 * k2R + 2.0 * k3R + k4R);
    R = vartraj::lie::project_rotation(R);
    x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    pts.row(i + 1) = x.transpose();
  }
  return SampledCurve(std::move(s), std::move(pts), true);
}

double bent_kappa(double s) { return 1.5 + 0.8 * std::sin(2.0 * M_PI * s); }
double bent_tau(double s) { return 0.6 * std::cos(M_PI * s); }

SampledCurve bent_curve(int K) { return curve_from_profiles(bent_kappa, bent_tau, K); }

}  // namespace fixtures
