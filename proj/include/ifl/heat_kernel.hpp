#pragma once

#include <functional>
#include <vector>

#include "ifl/math_util.hpp"
#include "ifl/spline.hpp"

namespace ifl {

// Self-similar profile of the 1D fractional heat semigroup of order s:
//
//   p(x, t) = t^{-1/(2s)} F(|x| t^{-1/(2s)}),
//   F(r)    = (1/pi) int_0^inf cos(r xi) exp(-xi^{2s}) dxi.
//
// F is tabulated on [0, r_max] by oscillatory panel quadrature (panels split
// at the cosine zeros) and interpolated by a clamped cubic spline whose end
// slopes are the true F'(0) = 0 and F'(r_max). Beyond r_max the profile
// continues with the algebraic shape A (1 + r^2)^{-(1+2s)/2}, the constant A
// matched continuously at r_max. Immutable after build; all evaluations are
// pure reads.
class Kernel1D {
 public:
  static Kernel1D build(double s, double r_max = 50.0, double dr = 0.01);

  double s() const { return s_; }
  double r_max() const { return r_max_; }
  double dr() const { return dr_; }
  double tail_constant() const { return tail_a_; }
  const std::vector<double>& table() const { return spline_.values(); }

  double profile(double r) const;             // F(|r|)
  double profile_derivative(double r) const;  // dF/dr, odd in r
  double profile_cdf(double rho) const;       // int_{-inf}^{rho} F
  double mass() const { return mass_; }       // int_R p(x,t) dx, t-free

  double eval(double x, double t) const;      // p(x, t), requires t > 0
  double cdf(double x, double t) const;       // int_{-inf}^{x} p(., t)

 private:
  double tail_value(double r) const;
  double tail_integral(double a, double b, double amp) const;

  // integrals switch from the true Fourier profile to the algebraic model here
  static constexpr double kFar = 400.0;

  double s_ = 0.0, r_max_ = 0.0, dr_ = 0.0;
  double tail_a_ = 0.0;         // A in A (1+r^2)^{-(1+2s)/2}, matched at r_max
  double tail_a_far_ = 0.0;     // amplitude re-matched at kFar for integrals
  double tail_full_ = 0.0;      // int_{r_max}^inf F (true to kFar, model after)
  double mass_ = 0.0;
  CubicSpline spline_;          // F on [0, r_max]
  std::vector<double> f2_;      // true F on [r_max, kFar], Simpson half-steps
  std::vector<double> cum2_;    // cumulative Simpson cells over f2_
};

// The two-sided comparison shape t / (t^{1/s} + x^2)^{(1+2s)/2}; the kernel
// is sandwiched between constant multiples of it.
double algebraic_shape(double x, double t, double s);

// Bounded initial profile for the convolution solver, with enough structure
// to integrate non-decaying data: u0 is split into a two-level step carrying
// the limits at -/+ infinity (convolved in closed form through the kernel
// CDF) plus a remainder that is negligible outside [-window, window].
struct ConvProfile {
  std::function<double(double)> f;
  double left_limit = 0.0;
  double right_limit = 0.0;
  double window = 20.0;
  std::vector<double> breakpoints;  // kinks/jumps of u0: panel edges snap here
};

// (p(., t) * u0)(x) by graded panel quadrature; panels refine geometrically
// around the kernel peak y = x and around each breakpoint of the data.
double convolve_point(const Kernel1D& k, const ConvProfile& u0, double x, double t);
std::vector<double> convolve_grid(const Kernel1D& k, const ConvProfile& u0,
                                  const std::vector<double>& xs, double t);

// Measured two-sided kernel-comparison band for an L^1 datum: the min and
// max over the probe lattice of v(x,t) / (|v0|_{L1} p(x,t)) together with the
// measured L^1 norm. Preconditions checked by sampling: 0 <= v0, v0 bounded
// by the algebraic envelope (1+y^2)^{-(1+2s)/2} outside |y| >= decay_radius,
// and v0 not identically zero.
struct HarnackBand {
  double k1 = 0.0;
  double k2 = 0.0;
  double l1_norm = 0.0;
};
HarnackBand harnack_constants(const ConvProfile& v0, double decay_radius,
                              const std::vector<double>& t_probe,
                              const std::vector<double>& x_probe,
                              const Kernel1D& k);

}  // namespace ifl
