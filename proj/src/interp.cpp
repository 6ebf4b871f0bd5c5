#include "vtb/interp.hpp"

#include <cmath>

#include "vtb/error.hpp"

namespace vtb {

namespace {

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

PchipInterpolant::PchipInterpolant(const Eigen::VectorXd& knot_x, const Eigen::VectorXd& knot_y)
    : x_(knot_x), y_(knot_y) {
  const Eigen::Index n = x_.size();
  if (n < 2 || y_.size() != n)
    throw Error(ErrorCode::invalid_argument, "pchip: need >= 2 knots and matching y");
  for (Eigen::Index i = 0; i + 1 < n; ++i)
    if (!(x_(i + 1) > x_(i)))
      throw Error(ErrorCode::invalid_argument, "pchip: knot_x must be strictly increasing");

  Eigen::VectorXd h(n - 1), delta(n - 1);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    h(i) = x_(i + 1) - x_(i);
    delta(i) = (y_(i + 1) - y_(i)) / h(i);
  }

  d_.resize(n);
  if (n == 2) {
    d_(0) = d_(1) = delta(0);
    return;
  }

  // Interior slopes: weighted harmonic mean of adjacent secants, zero at
  // local extrema (Fritsch-Carlson).
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    if (delta(i - 1) * delta(i) <= 0.0) {
      d_(i) = 0.0;
    } else {
      const double w1 = 2.0 * h(i) + h(i - 1);
      const double w2 = h(i) + 2.0 * h(i - 1);
      d_(i) = (w1 + w2) / (w1 / delta(i - 1) + w2 / delta(i));
    }
  }

  // Endpoint slopes: one-sided three-point estimate, clipped to preserve shape.
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (sgn(d) != sgn(d0))
      d = 0.0;
    else if (sgn(d0) != sgn(d1) && std::abs(d) > 3.0 * std::abs(d0))
      d = 3.0 * d0;
    return d;
  };
  d_(0) = end_slope(h(0), h(1), delta(0), delta(1));
  d_(n - 1) = end_slope(h(n - 2), h(n - 3), delta(n - 2), delta(n - 3));
}

double PchipInterpolant::operator()(double x) const {
  const Eigen::Index n = x_.size();
  if (x <= x_(0)) return y_(0);
  if (x >= x_(n - 1)) return y_(n - 1);

  // Binary search for the interval containing x.
  Eigen::Index lo = 0, hi = n - 1;
  while (hi - lo > 1) {
    const Eigen::Index mid = (lo + hi) / 2;
    (x_(mid) <= x ? lo : hi) = mid;
  }

  const double h = x_(lo + 1) - x_(lo);
  const double t = (x - x_(lo)) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * y_(lo) + h10 * h * d_(lo) + h01 * y_(lo + 1) + h11 * h * d_(lo + 1);
}

}  // namespace vtb
