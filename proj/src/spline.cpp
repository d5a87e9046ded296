#include "ifl/spline.hpp"

#include <cmath>

namespace ifl {

CubicSpline::CubicSpline(double x0, double h, std::vector<double> values,
                         double d_left, double d_right)
    : x0_(x0), h_(h), values_(std::move(values)) {
  require(h > 0.0 && values_.size() >= 3, "CubicSpline: need h > 0 and >= 3 knots");
  const std::size_t n = values_.size();
  const std::vector<double>& f = values_;

  // Tridiagonal system for the knot second derivatives (all off-diagonals 1).
  std::vector<double> diag(n, 4.0), rhs(n);
  diag.front() = diag.back() = 2.0;
  rhs.front() = 6.0 / h * ((f[1] - f[0]) / h - d_left);
  for (std::size_t i = 1; i + 1 < n; ++i)
    rhs[i] = 6.0 * (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (h * h);
  rhs.back() = 6.0 / h * (d_right - (f[n - 1] - f[n - 2]) / h);

  std::vector<double> c(n, 0.0);
  c[0] = 1.0 / diag[0];
  rhs[0] /= diag[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double piv = diag[i] - c[i - 1];
    c[i] = 1.0 / piv;
    rhs[i] = (rhs[i] - rhs[i - 1]) / piv;
  }
  mom_.resize(n);
  mom_[n - 1] = rhs[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) mom_[i] = rhs[i] - c[i] * mom_[i + 1];

  cum_.resize(n);
  cum_[0] = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    cum_[i + 1] = cum_[i] + 0.5 * h * (f[i] + f[i + 1]) -
                  h * h * h / 24.0 * (mom_[i] + mom_[i + 1]);
}

std::size_t CubicSpline::locate(double& x) const {
  const double lo = x_min(), hi = x_max();
  if (x < lo) x = lo;
  if (x > hi) x = hi;
  std::size_t i = static_cast<std::size_t>((x - x0_) / h_);
  if (i > values_.size() - 2) i = values_.size() - 2;
  return i;
}

double CubicSpline::operator()(double x) const {
  const std::size_t i = locate(x);
  const double a = x0_ + (i + 1) * h_ - x;
  const double b = x - (x0_ + i * h_);
  return (mom_[i] * a * a * a + mom_[i + 1] * b * b * b) / (6.0 * h_) +
         (values_[i] - mom_[i] * h_ * h_ / 6.0) * a / h_ +
         (values_[i + 1] - mom_[i + 1] * h_ * h_ / 6.0) * b / h_;
}

double CubicSpline::derivative(double x) const {
  const std::size_t i = locate(x);
  const double a = x0_ + (i + 1) * h_ - x;
  const double b = x - (x0_ + i * h_);
  return (-mom_[i] * a * a + mom_[i + 1] * b * b) / (2.0 * h_) +
         (values_[i + 1] - values_[i]) / h_ - (mom_[i + 1] - mom_[i]) * h_ / 6.0;
}

double CubicSpline::integral(double x) const {
  const std::size_t i = locate(x);
  const double a = x0_ + (i + 1) * h_ - x;
  const double b = x - (x0_ + i * h_);
  const double h = h_;
  return cum_[i] + mom_[i] * (h * h * h * h - a * a * a * a) / (24.0 * h) +
         mom_[i + 1] * b * b * b * b / (24.0 * h) +
         (values_[i] - mom_[i] * h * h / 6.0) * (h * h - a * a) / (2.0 * h) +
         (values_[i + 1] - mom_[i + 1] * h * h / 6.0) * b * b / (2.0 * h);
}

}  // namespace ifl
