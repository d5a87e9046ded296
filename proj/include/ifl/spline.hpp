#pragma once

#include <vector>

#include "ifl/math_util.hpp"

namespace ifl {

// Clamped cubic spline on a uniform grid x_i = x0 + i h with prescribed end
// slopes. Evaluation clamps the argument to the knot range; use integral()
// for exact antiderivatives of the piecewise cubic.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(double x0, double h, std::vector<double> values,
              double d_left, double d_right);

  double operator()(double x) const;
  double derivative(double x) const;
  double integral(double x) const;  // int_{x0}^{x}, x clamped to the range

  double x_min() const { return x0_; }
  double x_max() const { return x0_ + (values_.size() - 1) * h_; }
  double step() const { return h_; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t locate(double& x) const;

  double x0_ = 0.0, h_ = 1.0;
  std::vector<double> values_;
  std::vector<double> mom_;  // second derivatives at the knots
  std::vector<double> cum_;  // cum_[i] = int_{x0}^{x_i}
};

}  // namespace ifl
