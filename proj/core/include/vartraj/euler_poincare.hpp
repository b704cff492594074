#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "vartraj/trajectory.hpp"

namespace vartraj::ep {

// Structure constants C^k_{ij} of a Lie algebra basis: [E_i, E_j] = sum_k
// C^k_{ij} E_k. Stored as C[k](i,j). Construction validates antisymmetry in
// (i,j) and the Jacobi identity to 1e-12.
class StructureConstants {
 public:
  explicit StructureConstants(std::vector<Eigen::MatrixXd> C);

  static StructureConstants so3();
  static StructureConstants abelian(int n);
  // so(3) |x R^3 with basis (rotations E1..E3, translations E4..E6).
  static StructureConstants se3();

  int dim() const { return static_cast<int>(C_.size()); }
  double operator()(int k, int i, int j) const { return C_[k](i, j); }
  const Eigen::MatrixXd& component(int k) const { return C_[k]; }

 private:
  std::vector<Eigen::MatrixXd> C_;
};

// S^i_{lj} = sum_k K_{kl} C^k_{ij}, the tensor whose antisymmetry in (l, j)
// collapses the Euler-Poincare equation to xi(t) = xi(0). Stored S[i](l,j).
std::vector<Eigen::MatrixXd> s_tensor(const Eigen::MatrixXd& K, const StructureConstants& C);

bool antisymmetry_test(const std::vector<Eigen::MatrixXd>& S, double tol = 1e-12);

// Moment of inertia (or metric weight) and the velocity offset omega0 of the
// cost 1/2 (omega - omega0)^T I (omega - omega0).
struct InertiaSpec {
  Eigen::Matrix3d inertia = Eigen::Matrix3d::Identity();
  Eigen::Vector3d omega0 = Eigen::Vector3d::Zero();

  InertiaSpec() = default;
  InertiaSpec(Eigen::Matrix3d I, Eigen::Vector3d w0);
};

struct BodyVelocityPath {
  Eigen::VectorXd t;
  Eigen::MatrixXd omega;              // rows = samples
  std::vector<Eigen::Matrix3d> R;     // reconstructed orientation, same grid

  Trajectory omega_trajectory() const { return Trajectory(t, omega); }
};

// Fixed-step RK4 integration of I w' + w x I (w - w0) = 0 together with
// R' = R hat(w); R is reorthonormalized by polar projection every step.
BodyVelocityPath ep_integrate_so3(const InertiaSpec& spec, const Eigen::Vector3d& omega_init,
                                  const Eigen::Matrix3d& R_init, double T, double dt);

// omega(t) = exp(-t hat(omega0)) omega(0): exact solution for I = identity.
Eigen::Vector3d closed_form_omega(const Eigen::Vector3d& omega_init,
                                  const Eigen::Vector3d& omega0, double t);

// d f / d xi along a trajectory; for the quadratic costs here the group
// gradient (Etilde f) is zero, but a rule can be supplied.
using GradientRule = std::function<Eigen::VectorXd(double t, const Eigen::VectorXd& xi)>;

// Per-sample residual of d/dt (df/dxi_i) + sum_{j,k} (df/dxi_k) C^k_{ij} xi_j
// - Etilde_i f, with the time derivative by finite differences. Rows line up
// with the trajectory samples.
Eigen::MatrixXd ep_residual(const StructureConstants& C, const GradientRule& dfdxi,
                            const Trajectory& xi, const GradientRule& etilde = nullptr);

}  // namespace vartraj::ep
