#include "vartraj/numerics.hpp"

#include <cmath>
#include <cstdint>

#include "vartraj/errors.hpp"

namespace vartraj {

Eigen::VectorXd fd_derivative(const Eigen::VectorXd& t, const Eigen::VectorXd& v) {
  const Eigen::Index n = t.size();
  if (n != v.size() || n < 3) throw InvalidInputError("fd_derivative: need >= 3 samples");
  Eigen::VectorXd d(n);

  // Near-uniform grids get the constant-h stencils. The per-node Lagrange
  // weights below suffer eps-level cancellation that repeated
  // differentiation of derived fields amplifies by 1/h per pass.
  const double h = (t[n - 1] - t[0]) / static_cast<double>(n - 1);
  bool uniform = true;
  for (Eigen::Index i = 0; i + 1 < n && uniform; ++i)
    uniform = std::abs((t[i + 1] - t[i]) - h) <= 1e-9 * std::abs(h);
  if (uniform) {
    d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
    for (Eigen::Index i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
    d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h);
    return d;
  }

  for (Eigen::Index i = 0; i < n; ++i) {
    // Lagrange derivative weights through three neighbouring nodes.
    const Eigen::Index j = (i == 0) ? 1 : (i == n - 1 ? n - 2 : i);
    const double t0 = t[j - 1], t1 = t[j], t2 = t[j + 1];
    const double y0 = v[j - 1], y1 = v[j], y2 = v[j + 1];
    const double x = t[i];
    const double w0 = (2.0 * x - t1 - t2) / ((t0 - t1) * (t0 - t2));
    const double w1 = (2.0 * x - t0 - t2) / ((t1 - t0) * (t1 - t2));
    const double w2 = (2.0 * x - t0 - t1) / ((t2 - t0) * (t2 - t1));
    d[i] = w0 * y0 + w1 * y1 + w2 * y2;
  }
  return d;
}

Eigen::MatrixXd fd_derivative(const Eigen::VectorXd& t, const Eigen::MatrixXd& v) {
  Eigen::MatrixXd d(v.rows(), v.cols());
  for (Eigen::Index c = 0; c < v.cols(); ++c) d.col(c) = fd_derivative(t, Eigen::VectorXd(v.col(c)));
  return d;
}

double trapezoid(const Eigen::VectorXd& t, const Eigen::VectorXd& v) {
  if (t.size() != v.size() || t.size() < 2) throw InvalidInputError("trapezoid: bad sizes");
  double s = 0.0;
  for (Eigen::Index i = 0; i + 1 < t.size(); ++i)
    s += 0.5 * (v[i] + v[i + 1]) * (t[i + 1] - t[i]);
  return s;
}

Eigen::VectorXd cumulative_trapezoid(const Eigen::VectorXd& t, const Eigen::VectorXd& v) {
  if (t.size() != v.size() || t.size() < 2) throw InvalidInputError("cumulative_trapezoid: bad sizes");
  Eigen::VectorXd c(t.size());
  c[0] = 0.0;
  for (Eigen::Index i = 0; i + 1 < t.size(); ++i)
    c[i + 1] = c[i] + 0.5 * (v[i] + v[i + 1]) * (t[i + 1] - t[i]);
  return c;
}

Eigen::VectorXd cumulative_trapezoid_corrected(const Eigen::VectorXd& t,
                                               const Eigen::VectorXd& v) {
  if (t.size() < 3) return cumulative_trapezoid(t, v);
  Eigen::VectorXd dv = fd_derivative(t, v);
  Eigen::VectorXd c(t.size());
  c[0] = 0.0;
  for (Eigen::Index i = 0; i + 1 < t.size(); ++i) {
    const double h = t[i + 1] - t[i];
    c[i + 1] = c[i] + 0.5 * (v[i] + v[i + 1]) * h - h * h / 12.0 * (dv[i + 1] - dv[i]);
  }
  return c;
}

double integrate_simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n < 2) n = 2;
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

PchipInterpolant::PchipInterpolant(Eigen::VectorXd x, Eigen::VectorXd y)
    : x_(std::move(x)), y_(std::move(y)) {
  const Eigen::Index n = x_.size();
  if (n != y_.size() || n < 2) throw InvalidInputError("pchip: need >= 2 samples");
  for (Eigen::Index i = 0; i + 1 < n; ++i)
    if (!(x_[i + 1] > x_[i])) throw InvalidInputError("pchip: grid not strictly increasing");

  d_.resize(n);
  if (n == 2) {
    d_[0] = d_[1] = (y_[1] - y_[0]) / (x_[1] - x_[0]);
    return;
  }
  Eigen::VectorXd h(n - 1), delta(n - 1);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    delta[i] = (y_[i + 1] - y_[i]) / h[i];
  }
  // Fritsch-Butland interior slopes.
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      d_[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  // One-sided ends with monotonicity limiting.
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (d * d0 <= 0.0)
      d = 0.0;
    else if (d0 * d1 <= 0.0 && std::abs(d) > 3.0 * std::abs(d0))
      d = 3.0 * d0;
    return d;
  };
  d_[0] = end_slope(h[0], h[1], delta[0], delta[1]);
  d_[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
}

int PchipInterpolant::find_interval(double xq) const {
  const auto* begin = x_.data();
  const auto* end = x_.data() + x_.size();
  const auto* it = std::upper_bound(begin, end, xq);
  int i = static_cast<int>(it - begin) - 1;
  if (i < 0) i = 0;
  if (i > static_cast<int>(x_.size()) - 2) i = static_cast<int>(x_.size()) - 2;
  return i;
}

double PchipInterpolant::operator()(double xq) const {
  if (xq <= x_[0]) xq = x_[0];
  if (xq >= x_[x_.size() - 1]) xq = x_[x_.size() - 1];
  const int i = find_interval(xq);
  const double h = x_[i + 1] - x_[i];
  const double s = (xq - x_[i]) / h;
  const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
  const double h10 = s * (1 - s) * (1 - s);
  const double h01 = s * s * (3 - 2 * s);
  const double h11 = s * s * (s - 1);
  return h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
}

double PchipInterpolant::derivative(double xq) const {
  if (xq <= x_[0]) xq = x_[0];
  if (xq >= x_[x_.size() - 1]) xq = x_[x_.size() - 1];
  const int i = find_interval(xq);
  const double h = x_[i + 1] - x_[i];
  const double s = (xq - x_[i]) / h;
  const double g00 = 6 * s * (s - 1) / h;
  const double g10 = (1 - s) * (1 - 3 * s);
  const double g01 = -g00;
  const double g11 = s * (3 * s - 2);
  return g00 * y_[i] + g10 * d_[i] + g01 * y_[i + 1] + g11 * d_[i + 1];
}

double interp_cubic(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double xq) {
  const Eigen::Index n = x.size();
  if (n != y.size() || n < 2) throw InvalidInputError("interp_cubic: bad sizes");
  if (n < 4) {
    // Fall back to linear on tiny inputs.
    const auto* it = std::upper_bound(x.data(), x.data() + n, xq);
    Eigen::Index i = it - x.data() - 1;
    if (i < 0) i = 0;
    if (i > n - 2) i = n - 2;
    const double s = (xq - x[i]) / (x[i + 1] - x[i]);
    return (1 - s) * y[i] + s * y[i + 1];
  }
  const auto* it = std::upper_bound(x.data(), x.data() + n, xq);
  Eigen::Index i = it - x.data() - 1;
  Eigen::Index j = i - 1;  // left end of 4-point stencil
  if (j < 0) j = 0;
  if (j > n - 4) j = n - 4;
  double out = 0.0;
  for (Eigen::Index k = j; k < j + 4; ++k) {
    double w = 1.0;
    for (Eigen::Index l = j; l < j + 4; ++l) {
      if (l == k) continue;
      w *= (xq - x[l]) / (x[k] - x[l]);
    }
    out += w * y[k];
  }
  return out;
}

double invert_increasing(const std::function<double(double)>& f, double lo, double hi,
                         double target, double tol) {
  double flo = f(lo) - target;
  double fhi = f(hi) - target;
  if (flo > 0.0 || fhi < 0.0) {
    if (std::abs(flo) <= tol) return lo;
    if (std::abs(fhi) <= tol) return hi;
    throw InvalidInputError("invert_increasing: target not bracketed");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) - target <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace vartraj
