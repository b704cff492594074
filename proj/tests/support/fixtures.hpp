#pragma once

#include <Eigen/Dense>
#include <functional>

#include "vartraj/frenet.hpp"

namespace fixtures {

// Unit-speed circular helix x(s) = (a cos(s/c), a sin(s/c), b s/c) with
// a = b = 1, c = sqrt(2), s in [0,1]; kappa = tau = 1/2.
vartraj::frenet::SampledCurve helix_curve(int K);

// Arclength curve synthesized from curvature/torsion profiles by RK4
// integration of the frame ODE R' = R hat((tau, 0, kappa)), x' = t.
// The profiles are the ground truth the apparatus must recover.
vartraj::frenet::SampledCurve curve_from_profiles(const std::function<double(double)>& kappa,
                                                  const std::function<double(double)>& tau,
                                                  int K);

// Non-constant curvature and torsion profiles for the bent-curve fixture.
double bent_kappa(double s);
double bent_tau(double s);
vartraj::frenet::SampledCurve bent_curve(int K);

}  // namespace fixtures
