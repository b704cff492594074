#include "vartraj/euler_poincare.hpp"

#include <Eigen/Cholesky>
#include <cmath>

#include "vartraj/errors.hpp"
#include "vartraj/lie_core.hpp"
#include "vartraj/numerics.hpp"

namespace vartraj::ep {

StructureConstants::StructureConstants(std::vector<Eigen::MatrixXd> C) : C_(std::move(C)) {
  const int n = dim();
  if (n == 0) throw InvalidInputError("StructureConstants: empty");
  for (const auto& m : C_)
    if (m.rows() != n || m.cols() != n)
      throw InvalidInputError("StructureConstants: shape mismatch");
  for (int k = 0; k < n; ++k)
    if ((C_[k] + C_[k].transpose()).cwiseAbs().maxCoeff() > 1e-12)
      throw InvalidInputError("StructureConstants: not antisymmetric in (i,j)");
  // Jacobi: sum_m C^m_{ij} C^l_{mk} + C^m_{jk} C^l_{mi} + C^m_{ki} C^l_{mj} = 0.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int m = 0; m < n; ++m)
            s += C_[m](i, j) * C_[l](m, k) + C_[m](j, k) * C_[l](m, i) +
                 C_[m](k, i) * C_[l](m, j);
          if (std::abs(s) > 1e-12)
            throw InvalidInputError("StructureConstants: Jacobi identity violated");
        }
}

StructureConstants StructureConstants::so3() {
  std::vector<Eigen::MatrixXd> C(3, Eigen::MatrixXd::Zero(3, 3));
  // C^k_{ij} = epsilon_{ijk} with E_i^vee = e_i (matches the hat map).
  C[0](1, 2) = 1.0;
  C[0](2, 1) = -1.0;
  C[1](2, 0) = 1.0;
  C[1](0, 2) = -1.0;
  C[2](0, 1) = 1.0;
  C[2](1, 0) = -1.0;
  return StructureConstants(std::move(C));
}

StructureConstants StructureConstants::abelian(int n) {
  return StructureConstants(std::vector<Eigen::MatrixXd>(n, Eigen::MatrixXd::Zero(n, n)));
}

StructureConstants StructureConstants::se3() {
  std::vector<Eigen::MatrixXd> C(6, Eigen::MatrixXd::Zero(6, 6));
  auto eps = [](int i, int j, int k) -> double {
    if (i == j || j == k || i == k) return 0.0;
    return (j - i + 3) % 3 == 1 ? 1.0 : -1.0;  // cyclic order of distinct indices
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const double e = eps(i, j, k);
        if (e == 0.0) continue;
        C[k](i, j) = e;              // [rot, rot] -> rot
        C[3 + k](i, 3 + j) = e;      // [rot, trans] -> trans
        C[3 + k](3 + i, j) = e;      // [trans, rot] = -[rot, trans] entrywise
      }
  return StructureConstants(std::move(C));
}

std::vector<Eigen::MatrixXd> s_tensor(const Eigen::MatrixXd& K, const StructureConstants& C) {
  const int n = C.dim();
  if (K.rows() != n || K.cols() != n) throw InvalidInputError("s_tensor: K shape mismatch");
  std::vector<Eigen::MatrixXd> S(n, Eigen::MatrixXd::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += K(k, l) * C(k, i, j);
        S[i](l, j) = s;
      }
  return S;
}

bool antisymmetry_test(const std::vector<Eigen::MatrixXd>& S, double tol) {
  for (const auto& Si : S)
    if ((Si + Si.transpose()).cwiseAbs().maxCoeff() > tol) return false;
  return true;
}

InertiaSpec::InertiaSpec(Eigen::Matrix3d I, Eigen::Vector3d w0)
    : inertia(std::move(I)), omega0(std::move(w0)) {
  if ((inertia - inertia.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw InvalidInputError("InertiaSpec: inertia not symmetric");
  Eigen::LLT<Eigen::Matrix3d> llt(inertia);
  if (llt.info() != Eigen::Success)
    throw InvalidInputError("InertiaSpec: inertia not positive definite");
}

BodyVelocityPath ep_integrate_so3(const InertiaSpec& spec, const Eigen::Vector3d& omega_init,
                                  const Eigen::Matrix3d& R_init, double T, double dt) {
  if (!(dt > 0.0) || !(T > 0.0)) throw InvalidInputError("ep_integrate_so3: T and dt must be > 0");
  const Eigen::Matrix3d I = spec.inertia;
  const Eigen::Matrix3d Iinv = I.inverse();
  const Eigen::Vector3d w0 = spec.omega0;

  const int steps = static_cast<int>(std::round(T / dt));
  const double h = T / steps;

  auto omega_dot = [&](const Eigen::Vector3d& w) -> Eigen::Vector3d {
    return -Iinv * (w.cross(I * (w - w0)));
  };

  BodyVelocityPath path;
  path.t.resize(steps + 1);
  path.omega.resize(steps + 1, 3);
  path.R.resize(steps + 1);

  Eigen::Vector3d w = omega_init;
  Eigen::Matrix3d R = R_init;
  path.t[0] = 0.0;
  path.omega.row(0) = w.transpose();
  path.R[0] = R;

  for (int i = 0; i < steps; ++i) {
    // Joint RK4 step on (omega, R).
    const Eigen::Vector3d k1w = omega_dot(w);
    const Eigen::Matrix3d k1R = R * lie::hat(w);
    const Eigen::Vector3d w2 = w + 0.5 * h * k1w;
    const Eigen::Matrix3d R2 = R + 0.5 * h * k1R;
    const Eigen::Vector3d k2w = omega_dot(w2);
    const Eigen::Matrix3d k2R = R2 * lie::hat(w2);
    const Eigen::Vector3d w3 = w + 0.5 * h * k2w;
    const Eigen::Matrix3d R3 = R + 0.5 * h * k2R;
    const Eigen::Vector3d k3w = omega_dot(w3);
    const Eigen::Matrix3d k3R = R3 * lie::hat(w3);
    const Eigen::Vector3d w4 = w + h * k3w;
    const Eigen::Matrix3d R4 = R + h * k3R;
    const Eigen::Vector3d k4w = omega_dot(w4);
    const Eigen::Matrix3d k4R = R4 * lie::hat(w4);

    w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    R += h / 6.0 * (k1R + 2.0 * k2R + 2.0 * k3R + k4R);
    R = lie::project_rotation(R);

    path.t[i + 1] = (i + 1) * h;
    path.omega.row(i + 1) = w.transpose();
    path.R[i + 1] = R;
  }
  return path;
}

Eigen::Vector3d closed_form_omega(const Eigen::Vector3d& omega_init,
                                  const Eigen::Vector3d& omega0, double t) {
  return lie::exp_so3(-t * omega0) * omega_init;
}

Eigen::MatrixXd ep_residual(const StructureConstants& C, const GradientRule& dfdxi,
                            const Trajectory& xi, const GradientRule& etilde) {
  const int n = C.dim();
  if (xi.dim() != n) throw InvalidInputError("ep_residual: trajectory dimension mismatch");
  const Eigen::Index m = xi.samples();

  Eigen::MatrixXd p(m, n);  // df/dxi along the trajectory
  for (Eigen::Index s = 0; s < m; ++s) {
    Eigen::VectorXd g = dfdxi(xi.t[s], xi.q.row(s).transpose());
    if (g.size() != n) throw InvalidInputError("ep_residual: gradient rule dimension mismatch");
    p.row(s) = g.transpose();
  }
  Eigen::MatrixXd pdot = fd_derivative(xi.t, p);

  Eigen::MatrixXd res(m, n);
  for (Eigen::Index s = 0; s < m; ++s) {
    for (int i = 0; i < n; ++i) {
      double v = pdot(s, i);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) v += p(s, k) * C(k, i, j) * xi.q(s, j);
      res(s, i) = v;
    }
    if (etilde) res.row(s) -= etilde(xi.t[s], xi.q.row(s).transpose()).transpose();
  }
  return res;
}

}  // namespace vartraj::ep
