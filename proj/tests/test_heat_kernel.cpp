#include <doctest.h>

#include <cmath>

#include "ifl/catalog.hpp"
#include "ifl/heat_kernel.hpp"
#include "ifl/math_util.hpp"
#include "ifl/operators.hpp"
#include "reference_values.hpp"

using namespace ifl;

TEST_CASE("profile table against oracle values at s = 3/4") {
  Kernel1D k = Kernel1D::build(0.75);
  CHECK(k.profile(0.0) == doctest::Approx(refvals::kF075_0).epsilon(5e-8));
  CHECK(k.profile(0.5) == doctest::Approx(refvals::kF075_0_5).epsilon(5e-8));
  CHECK(k.profile(1.0) == doctest::Approx(refvals::kF075_1).epsilon(5e-8));
  CHECK(k.profile(2.0) == doctest::Approx(refvals::kF075_2).epsilon(5e-8));
  CHECK(k.profile(5.0) == doctest::Approx(refvals::kF075_5).epsilon(5e-8));
  CHECK(k.profile(10.0) == doctest::Approx(refvals::kF075_10).epsilon(5e-7));
  CHECK(k.profile_derivative(0.5) ==
        doctest::Approx(refvals::kF075_prime_05).epsilon(1e-5));
  CHECK(k.profile(-1.0) == k.profile(1.0));  // even
}

TEST_CASE("order one half is the Cauchy kernel") {
  Kernel1D k = Kernel1D::build(0.5);
  CHECK(std::abs(k.profile(0.0) - refvals::kF05_0) <= 1e-6);
  CHECK(std::abs(k.profile(1.0) - refvals::kF05_1) <= 1e-6);
  CHECK(std::abs(k.profile(3.0) - refvals::kF05_3) <= 1e-6);
  // p(x, t) = t / (pi (t^2 + x^2))
  for (double x : {0.0, 0.7, 2.5})
    for (double t : {0.5, 1.0, 2.0})
      CHECK(std::abs(k.eval(x, t) - t / (M_PI * (t * t + x * x))) <= 1e-6);
}

TEST_CASE("unit mass at several orders") {
  for (double s : {0.6, 0.75, 0.9}) {
    Kernel1D k = Kernel1D::build(s);
    CHECK(std::abs(k.mass() - 1.0) <= 1e-6);
  }
}

TEST_CASE("profile is strictly decreasing in the radius") {
  Kernel1D k = Kernel1D::build(0.75);
  const std::vector<double>& tab = k.table();
  for (std::size_t i = 0; i + 1 < tab.size(); ++i) CHECK(tab[i + 1] < tab[i]);
  // spot checks through the spline and into the algebraic tail
  double prev = k.profile(0.0);
  for (double r = 0.25; r <= 80.0; r *= 1.3) {
    const double v = k.profile(r);
    CHECK(v < prev);
    CHECK(v > 0.0);
    prev = v;
  }
}

TEST_CASE("self-similar scaling of the space-time kernel") {
  Kernel1D k = Kernel1D::build(0.75);
  const double t = 0.7, x = 1.3;
  const double lam = std::pow(t, -1.0 / 1.5);
  CHECK(k.eval(x, t) == doctest::Approx(lam * k.profile(x * lam)).epsilon(1e-12));
  // mass is time free: CDF sweeps from 0 to 1 at every t
  CHECK(k.cdf(-60.0, 0.5) <= 2e-3);
  CHECK(k.cdf(60.0, 0.5) >= 1.0 - 2e-3);
  CHECK(k.cdf(0.0, 0.5) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("kernel satisfies its own evolution equation") {
  // d/dt p = cs * pair-integral of p(., t) in x, checked by a central time
  // difference at probes spanning the core and the shoulder.
  Kernel1D k = Kernel1D::build(0.75);
  const double t = 1.0, dt = 1e-4;
  for (double x : {0.0, 0.7, 2.0}) {
    AnalyticField slice(1, [&k, t](const Vec& v) { return k.eval(v[0], t); });
    slice.with_far_value(0.0);
    QuadRule rule;
    rule.cut = 60.0;
    const double lhs = (k.eval(x, t + dt) - k.eval(x, t - dt)) / (2.0 * dt);
    const double rhs = frac_lap_1d(slice, x, 0.75, rule);
    CHECK(std::abs(lhs - rhs) <= 1e-3 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("semigroup property under convolution") {
  Kernel1D k = Kernel1D::build(0.75);
  ConvProfile v0;
  v0.f = [&k](double y) { return k.eval(y, 0.6); };
  v0.window = 40.0;
  for (double x : {0.0, 1.0}) {
    const double got = convolve_point(k, v0, x, 0.4);
    CHECK(std::abs(got - k.eval(x, 1.0)) <= 1e-5);
  }
}

TEST_CASE("convolution with a gaussian against oracle values") {
  Kernel1D k = Kernel1D::build(0.75);
  ConvProfile v0;
  v0.f = [](double y) { return std::exp(-y * y); };
  v0.window = 8.0;
  CHECK(std::abs(convolve_point(k, v0, 0.0, 0.5) - refvals::kConvGauss_x0_t0_5) <=
        1e-6);
  CHECK(std::abs(convolve_point(k, v0, 1.0, 0.5) - refvals::kConvGauss_x1_t0_5) <=
        1e-6);
  CHECK(std::abs(convolve_point(k, v0, 2.0, 0.5) - refvals::kConvGauss_x2_t0_5) <=
        1e-6);
  CHECK(std::abs(convolve_point(k, v0, 0.0, 1.0) - refvals::kConvGauss_x0_t1) <=
        1e-6);
  std::vector<double> grid = convolve_grid(k, v0, {0.0, 1.0, 2.0}, 0.5);
  CHECK(grid[1] == doctest::Approx(convolve_point(k, v0, 1.0, 0.5)).epsilon(1e-14));
}

TEST_CASE("steps with limits convolve through the kernel CDF") {
  Kernel1D k = Kernel1D::build(0.75);
  ConvProfile step;
  step.f = [](double y) { return y < 0.0 ? 2.0 : 0.5; };
  step.left_limit = 2.0;
  step.right_limit = 0.5;
  step.window = 1.0;
  step.breakpoints = {0.0};
  // at the jump the smoothed profile passes through the midpoint
  CHECK(std::abs(convolve_point(k, step, 0.0, 0.3) - 1.25) <= 1e-5);
  // far from the jump it approaches the one-sided limits
  CHECK(convolve_point(k, step, -30.0, 0.3) ==
        doctest::Approx(2.0).epsilon(2e-2));
  CHECK(convolve_point(k, step, 30.0, 0.3) ==
        doctest::Approx(0.5).epsilon(2e-2));
}

TEST_CASE("algebraic comparison shape") {
  // the tabulated profile sits between positive multiples of the shape
  Kernel1D k = Kernel1D::build(0.75);
  double lo = 1e300, hi = 0.0;
  for (double r = 0.0; r <= 45.0; r += 0.5) {
    const double ratio = k.profile(r) / algebraic_shape(r, 1.0, 0.75);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK(lo > 0.05);
  CHECK(hi < 20.0);
  CHECK(std::isfinite(hi));
  // time scaling of the shape itself
  CHECK(algebraic_shape(0.0, 2.0, 0.75) ==
        doctest::Approx(2.0 * std::pow(std::pow(2.0, 1.0 / 0.75), -1.25))
            .epsilon(1e-12));
}

TEST_CASE("two-sided band constants for a compact bump") {
  Kernel1D k = Kernel1D::build(0.75);
  RadialProfile mp = mollifier_profile();
  ConvProfile v0;
  v0.f = [mp](double y) { return mp.f(std::abs(y)); };
  v0.window = 4.0;
  v0.breakpoints = {-2.0, 2.0};
  std::vector<double> xs;
  for (int i = -6; i <= 6; ++i) xs.push_back(static_cast<double>(i));
  HarnackBand hb = harnack_constants(v0, 2.5, {0.5, 1.0}, xs, k);
  CHECK(hb.k1 > 0.0);
  CHECK(hb.k2 >= hb.k1);
  CHECK(std::isfinite(hb.k2));
  // 2e * int_{-1}^{1} exp(-1/(1-t^2)) dt = 2.41380...
  CHECK(hb.l1_norm == doctest::Approx(2.4138).epsilon(1e-2));
}

TEST_CASE("band constants reject data outside the comparison class") {
  Kernel1D k = Kernel1D::build(0.75);
  ConvProfile bad;
  bad.f = [](double y) { return y > 0.0 ? -1.0 : 1.0; };  // signed
  bad.window = 4.0;
  CHECK_THROWS_AS(harnack_constants(bad, 2.5, {1.0}, {0.0, 1.0}, k),
                  NumericalError);
}
