#include "vartraj/reparam1d.hpp"

#include <cmath>

#include "vartraj/errors.hpp"

namespace vartraj::reparam {

namespace {

constexpr double kEndpointTol = 1e-12;

// Cumulative integral of sqrt(m) on a fine uniform grid, each subinterval by
// Simpson with midpoint. Gives F(y) anywhere via table + partial fragment.
class SqrtDensityIntegral {
 public:
  SqrtDensityIntegral(const ScalarDensity& m, int n) : m_(m), n_(n), table_(n + 1) {
    table_[0] = 0.0;
    const double h = 1.0 / n_;
    for (int i = 0; i < n_; ++i) {
      const double a = i * h, b = (i + 1) * h;
      table_[i + 1] = table_[i] + simpson_cell(a, b);
    }
  }

  double operator()(double y) const {
    if (y <= 0.0) return 0.0;
    if (y >= 1.0) return table_[n_];
    const double h = 1.0 / n_;
    const int i = std::min(static_cast<int>(y / h), n_ - 1);
    return table_[i] + simpson_cell(i * h, y);
  }

  double total() const { return table_[n_]; }

 private:
  double simpson_cell(double a, double b) const {
    if (b <= a) return 0.0;
    const double fa = std::sqrt(check(m_(a), a));
    const double fm = std::sqrt(check(m_(0.5 * (a + b)), 0.5 * (a + b)));
    const double fb = std::sqrt(check(m_(b), b));
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  static double check(double v, double s) {
    if (!(v > 0.0))
      throw InvalidDensityError("density not positive at s=" + std::to_string(s));
    return v;
  }

  const ScalarDensity& m_;
  int n_;
  Eigen::VectorXd table_;
};

int quadrature_nodes(const ScalarDensity& m, int K) {
  const int base = std::max(4 * K, 2048);
  return std::max(base, 4 * m.nodes());
}

}  // namespace

ScalarDensity ScalarDensity::from_function(std::function<double(double)> m) {
  ScalarDensity d;
  d.fn_ = std::move(m);
  return d;
}

ScalarDensity ScalarDensity::from_samples(const Eigen::VectorXd& s, const Eigen::VectorXd& m) {
  if (s.size() != m.size() || s.size() < 2)
    throw InvalidDensityError("tabulated density: need >= 2 samples");
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (!(m[i] > 0.0))
      throw InvalidDensityError("tabulated density: non-positive sample at index " +
                                std::to_string(i));
  ScalarDensity d;
  d.table_.emplace(s, m);
  return d;
}

double ScalarDensity::operator()(double s) const {
  if (s < 0.0) s = 0.0;
  if (s > 1.0) s = 1.0;
  const double v = table_ ? (*table_)(s) : fn_(s);
  if (!(v > 0.0))
    throw InvalidDensityError("density not positive at s=" + std::to_string(s));
  return v;
}

int ScalarDensity::nodes() const {
  return table_ ? static_cast<int>(table_->grid().size()) : 0;
}

MonotoneMap::MonotoneMap(Eigen::VectorXd x, Eigen::VectorXd y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size() || x_.size() < 2)
    throw InvalidInputError("MonotoneMap: need >= 2 nodes");
  if (std::abs(y_[0]) > kEndpointTol || std::abs(y_[y_.size() - 1] - 1.0) > kEndpointTol)
    throw InvalidInputError("MonotoneMap: endpoints must be 0 and 1");
  for (Eigen::Index i = 0; i + 1 < x_.size(); ++i) {
    if (!(x_[i + 1] > x_[i])) throw InvalidInputError("MonotoneMap: grid not increasing");
    if (!(y_[i + 1] > y_[i])) throw InvalidInputError("MonotoneMap: values not increasing");
  }
  y_[0] = 0.0;
  y_[y_.size() - 1] = 1.0;
  interp_ = PchipInterpolant(x_, y_);
}

MonotoneMap MonotoneMap::identity(int K) {
  Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(K + 1, 0.0, 1.0);
  return MonotoneMap(x, x);
}

MonotoneMap MonotoneMap::inverse() const {
  if (std::abs(x_[0]) > kEndpointTol || std::abs(x_[x_.size() - 1] - 1.0) > kEndpointTol)
    throw InvalidInputError("MonotoneMap::inverse: grid must span [0,1]");
  return MonotoneMap(y_, x_);
}

MonotoneMap MonotoneMap::compose(const MonotoneMap& f, const MonotoneMap& g) {
  Eigen::VectorXd z(g.nodes());
  for (Eigen::Index i = 0; i < g.nodes(); ++i) z[i] = f(g.values()[i]);
  return MonotoneMap(g.grid(), z);
}

SampledPath::SampledPath(Eigen::VectorXd time, Eigen::MatrixXd points)
    : t(std::move(time)), X(std::move(points)) {
  if (t.size() != X.rows() || t.size() < 2 || X.cols() < 1)
    throw InvalidInputError("SampledPath: bad shape");
  for (Eigen::Index i = 0; i + 1 < t.size(); ++i)
    if (!(t[i + 1] > t[i])) throw InvalidInputError("SampledPath: times not strictly increasing");
}

MonotoneMap solve_reparam(const ScalarDensity& m, int K) {
  if (K < 2) throw InvalidInputError("solve_reparam: grid size must be >= 2");
  SqrtDensityIntegral F(m, quadrature_nodes(m, K));
  const double F1 = F.total();
  Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(K + 1, 0.0, 1.0);
  Eigen::VectorXd y(K + 1);
  y[0] = 0.0;
  y[K] = 1.0;
  double lo = 0.0;
  for (int i = 1; i < K; ++i) {
    // F is increasing, so solutions are ordered; reuse the previous one
    // as the lower bracket.
    y[i] = invert_increasing([&](double u) { return F(u); }, lo, 1.0, F1 * x[i], 1e-12);
    lo = y[i];
  }
  return MonotoneMap(std::move(x), std::move(y));
}

double path_cost(const ScalarDensity& m, const MonotoneMap& y) {
  const Eigen::VectorXd& x = y.grid();
  const Eigen::VectorXd& v = y.values();
  double cost = 0.0;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
    const double dx = x[i + 1] - x[i];
    const double slope = (v[i + 1] - v[i]) / dx;
    cost += m(0.5 * (v[i] + v[i + 1])) * slope * slope * dx;
  }
  return cost;
}

double optimal_cost(const ScalarDensity& m) {
  SqrtDensityIntegral F(m, quadrature_nodes(m, 512));
  const double F1 = F.total();
  return F1 * F1;
}

WarpResult warp_trajectory(const SampledPath& input) {
  const Eigen::Index n = input.t.size();
  // Normalize time to [0,1].
  const double t0 = input.t[0], span = input.t[n - 1] - input.t[0];
  Eigen::VectorXd tau(n);
  for (Eigen::Index i = 0; i < n; ++i) tau[i] = (input.t[i] - t0) / span;
  tau[0] = 0.0;
  tau[n - 1] = 1.0;

  double extent = 0.0;
  for (Eigen::Index i = 1; i < n; ++i)
    extent = std::max(extent, (input.X.row(i) - input.X.row(0)).norm());
  if (!(extent > 0.0)) throw DegeneratePathError("warp_trajectory: path is totally stationary");

  Eigen::MatrixXd dX = fd_derivative(tau, input.X);
  Eigen::VectorXd speed2 = dX.rowwise().squaredNorm();
  const double mean = speed2.mean();
  const double floor = 1e-6 * mean;
  for (Eigen::Index i = 0; i < n; ++i) speed2[i] = std::max(speed2[i], floor);

  ScalarDensity m = ScalarDensity::from_samples(tau, speed2);
  MonotoneMap map = solve_reparam(m, static_cast<int>(n) - 1);

  // Resample each coordinate at tau*(uniform grid).
  Eigen::MatrixXd Xw(n, input.X.cols());
  for (Eigen::Index i = 0; i < n; ++i) {
    const double ti = map.values()[i];
    for (Eigen::Index c = 0; c < input.X.cols(); ++c)
      Xw(i, c) = interp_cubic(tau, input.X.col(c), ti);
  }
  SampledPath warped(map.grid(), std::move(Xw));
  return {std::move(map), std::move(warped)};
}

}  // namespace vartraj::reparam
