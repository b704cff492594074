#pragma once

#include <Eigen/Dense>
#include <functional>

#include "vartraj/errors.hpp"

namespace vartraj {

// A sampled coordinate trajectory: q.row(i) is the state at t[i].
struct Trajectory {
  Eigen::VectorXd t;
  Eigen::MatrixXd q;

  Trajectory() = default;
  Trajectory(Eigen::VectorXd time, Eigen::MatrixXd values)
      : t(std::move(time)), q(std::move(values)) {
    if (t.size() != q.rows() || t.size() < 2)
      throw InvalidInputError("Trajectory: time grid and sample count mismatch");
    for (Eigen::Index i = 0; i + 1 < t.size(); ++i)
      if (!(t[i + 1] > t[i])) throw InvalidInputError("Trajectory: times not strictly increasing");
  }

  Eigen::Index samples() const { return t.size(); }
  Eigen::Index dim() const { return q.cols(); }
  double span() const { return t[t.size() - 1] - t[0]; }
};

// Total cost of a trajectory (a functional, evaluated by quadrature).
using CostFunction = std::function<double(const Trajectory&)>;

// Pointwise metric/mass matrix rule M(q).
using MetricRule = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

}  // namespace vartraj
