// Radial lifts, even extensions, the exact classical solution of radial data,
// and the dimension-reduction check that ties the n-dimensional operator to
// its 1D profile form.

#include <cmath>
#include <vector>

#include <doctest.h>

#include "ifl/catalog.hpp"
#include "ifl/heat_kernel.hpp"
#include "ifl/operators.hpp"
#include "ifl/quadrature.hpp"
#include "ifl/radial.hpp"
#include "reference_values.hpp"

using namespace ifl;

namespace {

double fd_first(const std::function<double(double)>& f, double r, double h) {
  return (f(r + h) - f(r - h)) / (2.0 * h);
}

double fd_second(const std::function<double(double)>& f, double r, double h) {
  return (f(r + h) - 2.0 * f(r) + f(r - h)) / (h * h);
}

}  // namespace

TEST_CASE("cap profile: paraboloid core, C2 blend, zero beyond radius 2") {
  RadialProfile cap = cap_profile();
  CHECK(cap.f(0.0) == 0.0);
  CHECK(cap.f(0.5) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(cap.f(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cap.f(2.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(cap.f(2.5) == 0.0);
  CHECK(cap.f(10.0) == 0.0);
  CHECK(cap.far_value == 0.0);
  CHECK(cap.constant_beyond == doctest::Approx(2.0));

  // Value, first, and second derivative must be continuous across both blend
  // seams (r = 1 and r = 2); a C^1-only blend would show an O(1) jump in the
  // one-sided second differences.
  for (double seam : {1.0, 2.0}) {
    const double h = 1e-4;
    double left = cap.f(seam - 1e-12);
    double right = cap.f(seam + 1e-12);
    CHECK(std::abs(right - left) <= 1e-10);
    double dl = fd_first(cap.f, seam - 2.0 * h, h);
    double dr = fd_first(cap.f, seam + 2.0 * h, h);
    CHECK(std::abs(dr - dl) <= 0.05);
    double sl = fd_second(cap.f, seam - 2.0 * h, h);
    double sr = fd_second(cap.f, seam + 2.0 * h, h);
    CHECK(std::abs(sr - sl) <= 0.2);
  }
}

TEST_CASE("cap profile: second-derivative sup matches the frozen constant") {
  CHECK(cap_hessian_sup() == doctest::Approx(refvals::kCapHessSup).epsilon(1e-12));

  // A finite-difference scan over the blend region should find the same sup.
  RadialProfile cap = cap_profile();
  double worst = 0.0;
  for (int i = 0; i <= 20000; ++i) {
    double r = 1e-3 + (2.0 - 2e-3) * i / 20000.0;
    if (std::abs(r - 1.0) < 1e-3 || std::abs(r - 2.0) < 1e-3) continue;
    worst = std::max(worst, std::abs(fd_second(cap.f, r, 1e-5)));
  }
  CHECK(worst == doctest::Approx(refvals::kCapHessSup).epsilon(1e-3));
}

TEST_CASE("cap lift: one-sided ray integral from the origin matches closed form") {
  // The origin is a critical point of the cap (gradient zero, value zero), so
  // the one-sided integral over (0, inf) is well defined; on the paraboloid
  // part it is integral of eta^(1-2s) which is computed in closed form near 0.
  AnalyticField cap2 = lift_radial(cap_profile(), 2);
  QuadRule rule;
  rule.cut = 12.0;
  PairIntegral one = integrate_one_sided(cap2, {0.0, 0.0}, {1.0, 0.0}, 0.75, rule);
  CHECK(one.value == doctest::Approx(refvals::kCapRayIntegral).epsilon(5e-6));
  // Measured second-difference coefficient of r^2 at the origin is 2.
  CHECK(one.curvature == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("lift_radial carries profile metadata into the field") {
  RadialProfile p;
  p.f = [](double r) { return r < 3.0 ? 1.0 - r / 3.0 + 0.25 : 0.25; };
  p.far_value = 0.25;
  p.constant_beyond = 3.0;
  p.jump_radii = {1.5, 2.5};

  AnalyticField f3 = lift_radial(p, 3);
  CHECK(f3.dim() == 3);
  REQUIRE(f3.far_value().has_value());
  CHECK(*f3.far_value() == 0.25);
  REQUIRE(f3.constant_beyond().has_value());
  CHECK(*f3.constant_beyond() == 3.0);
  REQUIRE(f3.jump_radii().size() == 2);
  CHECK(f3.jump_radii()[0] == 1.5);
  CHECK(f3.jump_radii()[1] == 2.5);

  Vec x = {1.0, 2.0, -2.0};
  double r = std::sqrt(1.0 + 4.0 + 4.0);
  CHECK(f3.eval(x) == doctest::Approx(p.f(r)).epsilon(1e-15));
}

TEST_CASE("even extension evaluates the profile at |r|") {
  RadialProfile g = gaussian_profile(1.0);
  AnalyticField line = even_extension(g);
  CHECK(line.dim() == 1);
  for (double r : {0.0, 0.3, 1.7, 4.0}) {
    CHECK(line.eval({r}) == doctest::Approx(g.f(r)).epsilon(1e-15));
    CHECK(line.eval({-r}) == doctest::Approx(g.f(r)).epsilon(1e-15));
  }
  REQUIRE(line.far_value().has_value());
  CHECK(*line.far_value() == 0.0);
}

TEST_CASE("classical solution at t = 0 reproduces the lifted datum") {
  Kernel1D k = Kernel1D::build(0.75);
  RadialProfile g = gaussian_profile(1.0);
  AnalyticField u0 = classical_solution(g, k, 0.0, 2);
  AnalyticField datum = lift_radial(g, 2);
  for (double r : {0.0, 0.5, 1.0, 2.5}) {
    Vec x = {r, -0.5 * r};
    CHECK(u0.eval(x) == doctest::Approx(datum.eval(x)).epsilon(1e-14));
  }
}

TEST_CASE("classical solution of the gaussian matches the convolution oracle") {
  Kernel1D k = Kernel1D::build(0.75);
  AnalyticField u_half = classical_solution(gaussian_profile(1.0), k, 0.5, 2);
  CHECK(u_half.eval({0.0, 0.0}) ==
        doctest::Approx(refvals::kConvGauss_x0_t0_5).epsilon(1e-6));
  CHECK(u_half.eval({1.0, 0.0}) ==
        doctest::Approx(refvals::kConvGauss_x1_t0_5).epsilon(1e-6));
  CHECK(u_half.eval({0.0, 2.0}) ==
        doctest::Approx(refvals::kConvGauss_x2_t0_5).epsilon(1e-6));

  // Radial symmetry of the lift: same radius, same value.
  double d = 1.0 / std::sqrt(2.0);
  CHECK(u_half.eval({d, d}) == doctest::Approx(u_half.eval({1.0, 0.0})).epsilon(1e-12));

  AnalyticField u_one = classical_solution(gaussian_profile(1.0), k, 1.0, 2);
  CHECK(u_one.eval({0.0, 0.0}) ==
        doctest::Approx(refvals::kConvGauss_x0_t1).epsilon(1e-6));

  // The solution stays inside the datum's range and decays with time at the
  // center (the datum maximum).
  CHECK(u_one.eval({0.0, 0.0}) < u_half.eval({0.0, 0.0}));
  CHECK(u_half.eval({0.0, 0.0}) < 1.0);
  CHECK(u_one.eval({3.0, 0.0}) > 0.0);
}

TEST_CASE("reduction check: 3D radial lift agrees with the 1D profile operator") {
  OperatorConfig cfg;
  cfg.s = 0.75;
  cfg.dirs = DirectionSet::uniform(3, 48);
  QuadRule rule_1d;
  std::vector<Vec> probes = {
      {0.0, 0.0, 0.0}, {0.6, 0.0, 0.0}, {0.0, 0.0, 1.1}, {0.5, 0.5, 0.5}};
  ReductionCheck rc = check_reduction(mollifier_profile(2.0), 3, probes, cfg, rule_1d);
  REQUIRE(rc.radii.size() == probes.size());
  REQUIRE(rc.lhs.size() == probes.size());
  REQUIRE(rc.rhs.size() == probes.size());
  CHECK(rc.radii[0] == doctest::Approx(0.0));
  CHECK(rc.radii[1] == doctest::Approx(0.6));
  CHECK(rc.radii[3] == doctest::Approx(std::sqrt(0.75)).epsilon(1e-12));
  CHECK(rc.max_abs_diff <= 5e-5);
}

TEST_CASE("x1 lift: planar field with per-ray limits") {
  AnalyticField f = lift_profile_x1([](double v) { return std::tanh(v); }, 2, -1.0, 1.0);
  CHECK(f.dim() == 2);
  CHECK(f.eval({0.3, 7.0}) == doctest::Approx(std::tanh(0.3)).epsilon(1e-15));
  CHECK(f.eval({0.3, -2.0}) == f.eval({0.3, 11.0}));

  // No uniform limit at infinity, but every ray has one.
  CHECK_FALSE(f.far_value().has_value());
  Vec x = {0.3, 7.0};
  REQUIRE(f.ray_far_value(x, {1.0, 0.0}).has_value());
  CHECK(*f.ray_far_value(x, {1.0, 0.0}) == 1.0);
  CHECK(*f.ray_far_value(x, {-1.0, 0.0}) == -1.0);
  CHECK(*f.ray_far_value(x, {0.8, 0.6}) == 1.0);
  CHECK(*f.ray_far_value(x, {-0.6, 0.8}) == -1.0);
  CHECK(*f.ray_far_value(x, {0.0, 1.0}) == doctest::Approx(std::tanh(0.3)).epsilon(1e-15));

  // Equal limits collapse to a uniform far value.
  AnalyticField even = lift_profile_x1([](double v) { return std::exp(-v * v); }, 2, 0.0, 0.0);
  REQUIRE(even.far_value().has_value());
  CHECK(*even.far_value() == 0.0);
}
