#ifndef VTB_INTERP_HPP
#define VTB_INTERP_HPP

#include <Eigen/Dense>

namespace vtb {

/// Monotonicity-preserving piecewise cubic Hermite interpolant with
/// Fritsch-Carlson slope limiting. Evaluation outside the knot range clamps to
/// the boundary knot value.
class PchipInterpolant {
public:
  PchipInterpolant() = default;
  PchipInterpolant(const Eigen::VectorXd& knot_x, const Eigen::VectorXd& knot_y);

  double operator()(double x) const;

  double x_min() const { return x_(0); }
  double x_max() const { return x_(x_.size() - 1); }
  Eigen::Index size() const { return x_.size(); }

private:
  Eigen::VectorXd x_, y_, d_;  // knots and limited slopes
};

}  // namespace vtb

#endif
