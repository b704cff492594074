#pragma once

#include <Eigen/Dense>

namespace vartraj::lie {

// Rotations are plain 3x3 matrices; is_rotation / project_rotation are the
// validation and repair tools. Poses carry their group law in the type:
// PoseDirect composes componentwise (the pose-change group SO(3) x R^3),
// PoseSE3 composes with the semidirect law of rigid-body motions.

struct PoseDirect {
  Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
  Eigen::Vector3d t = Eigen::Vector3d::Zero();
};

struct PoseSE3 {
  Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
  Eigen::Vector3d t = Eigen::Vector3d::Zero();
};

// Body-frame twist of an SE(3) path: angular = (R^T R')^vee, linear = R^T t'.
struct Twist6 {
  Eigen::Vector3d angular = Eigen::Vector3d::Zero();
  Eigen::Vector3d linear = Eigen::Vector3d::Zero();
};

bool is_rotation(const Eigen::Matrix3d& R, double tol = 1e-9);

// Nearest rotation in Frobenius norm (polar factor via SVD).
Eigen::Matrix3d project_rotation(const Eigen::Matrix3d& M);

// hat(w) v = w x v for all v.
Eigen::Matrix3d hat(const Eigen::Vector3d& w);

// Inverse of hat; requires the input to be skew to 1e-10.
Eigen::Vector3d vee(const Eigen::Matrix3d& omega);

Eigen::Matrix3d exp_so3(const Eigen::Vector3d& w);

// Rotation logarithm; rejects angles within 1e-6 of pi (no unique axis).
Eigen::Vector3d log_so3(const Eigen::Matrix3d& R);

// The rotation that most directly maps unit vector a to unit vector b
// (axis along a x b). Colinear inputs are rejected.
Eigen::Matrix3d rotation_between(const Eigen::Vector3d& a, const Eigen::Vector3d& b);

// R0 exp(t log(R0^T R1)); constant body angular velocity, geodesic of the
// bi-invariant metric for non-antipodal endpoints.
Eigen::Matrix3d geodesic_so3(const Eigen::Matrix3d& R0, const Eigen::Matrix3d& R1, double t);

// Minimal great-circle arc between non-colinear unit vectors.
Eigen::Vector3d sphere_geodesic(const Eigen::Vector3d& a, const Eigen::Vector3d& b, double t);

PoseDirect compose(const PoseDirect& g1, const PoseDirect& g2);
PoseDirect inverse(const PoseDirect& g);
PoseSE3 compose(const PoseSE3& g1, const PoseSE3& g2);
PoseSE3 inverse(const PoseSE3& g);

PoseSE3 exp_se3(const Twist6& xi);
Twist6 log_se3(const PoseSE3& g);

// Componentwise interpolation: SO(3) geodesic paired with the straight
// translation segment.
PoseDirect geodesic_pose_direct(const PoseDirect& g0, const PoseDirect& g1, double t);

// g0 exp(t log(g0^{-1} g1)) on SE(3): constant body twist, helical
// translation trace when rotation and translation couple.
PoseSE3 geodesic_se3(const PoseSE3& g0, const PoseSE3& g1, double t);

}  // namespace vartraj::lie
