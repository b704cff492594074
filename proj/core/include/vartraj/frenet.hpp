#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "vartraj/reparam1d.hpp"

namespace vartraj::frenet {

struct SampledCurve {
  Eigen::VectorXd s;   // strictly increasing parameter
  Eigen::MatrixXd x;   // rows = samples, 3 columns
  bool arclength = false;

  SampledCurve() = default;
  SampledCurve(Eigen::VectorXd param, Eigen::MatrixXd points, bool arclength_flag = false);
};

// Frenet-Serret data per sample. curvature/torsion are geometric (per unit
// arclength); `length` is the total curve length, which converts rates on
// the stored [0,1] parameter to arclength rates.
struct FrenetApparatus {
  Eigen::VectorXd s;
  Eigen::MatrixXd tangent, normal, binormal;  // rows = samples
  Eigen::VectorXd curvature, torsion;
  double length = 0.0;

  Eigen::Matrix3d frame(Eigen::Index i) const;  // columns [t, n, b]
};

struct RollProfile {
  Eigen::VectorXd s;
  Eigen::VectorXd theta;
};

struct FrameField {
  SampledCurve curve;
  std::vector<Eigen::Matrix3d> R;
  std::optional<RollProfile> roll;
};

// Twist about the tangent by angle theta (rotation about e1 in frame coords).
Eigen::Matrix3d roll_rotation(double theta);

// Relabel the parameter as normalized cumulative chord length and resample
// the points on a uniform grid of that parameter (local cubic interpolation).
SampledCurve arclength_parametrize(const SampledCurve& curve);

// Tangent/normal/binormal + curvature + torsion by second-order finite
// differences; torsion from the defining b' . n. Requires an
// arclength-parameterized curve and curvature above 1e-8 per unit length at
// interior samples.
FrenetApparatus frenet_apparatus(const SampledCurve& curve);

// Roll angle minimizing int (tau + theta')^2. Without theta1 it is the
// unconstrained optimum dtheta/ds = -tau from theta0; with theta1 the
// end-constrained theta*(s) = c1 + c2 s - int_0^s tau.
RollProfile minimal_twist(const FrenetApparatus& app, double theta0,
                          std::optional<double> theta1 = std::nullopt);

FrameField frenet_frames(const SampledCurve& curve, const FrenetApparatus& app);
FrameField with_roll(const FrameField& field, const FrenetApparatus& app, const RollProfile& roll);

// int |omega(s)|^2 ds where omega is the body angular rate of the frames in
// the stored parameter; equals int kappa^2 + (tau + theta')^2 for unit-length
// curves framed by R_FS R1(theta).
double frame_cost(const FrameField& field);

// Optimal parameter map for least frame variation: density
// m(s) = r^2 |omega(s)|^2 + L^2 fed to the 1D solver.
reparam::MonotoneMap reparam_frames(const FrameField& field, double r);

struct JointResult {
  reparam::MonotoneMap s_map;   // s*(t)
  RollProfile roll;             // theta*(t) on the uniform t grid
  FrameField frames;            // curve and frames resampled at s*(t)
};

// Joint roll + reparametrization (the bootstrapped problem): s* solves the
// 1D problem with the residual density r^2 kappa^2 + 1 (L=1), and
// theta*(t) = a t + theta0 - int tau ds* matches both roll endpoints.
JointResult joint_roll_reparam(const SampledCurve& curve, double r, double theta0, double theta1);

}  // namespace vartraj::frenet
