#include <doctest.h>

#include <cmath>

#include "ifl/catalog.hpp"
#include "ifl/operators.hpp"
#include "ifl/quadrature.hpp"
#include "ifl/sweep.hpp"

using namespace ifl;

namespace {

std::vector<double> random_values(std::size_t n, std::uint64_t seed) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = 2.0 * ((mix64(i * 2654435761u + seed) >> 11) * 0x1.0p-53) - 1.0;
  return v;
}

double sup_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double sup_abs(const std::vector<double>& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

TEST_CASE("kernel naming and availability") {
  CHECK(kernel_from_name("auto").value() == SweepKernel::kAuto);
  CHECK(kernel_from_name("scalar").value() == SweepKernel::kScalar);
  CHECK(kernel_from_name("reference").value() == SweepKernel::kReference);
  CHECK(kernel_from_name("avx2").value() == SweepKernel::kAvx2);
  CHECK(kernel_from_name("neon").value() == SweepKernel::kNeon);
  CHECK(!kernel_from_name("banana").has_value());
  CHECK(std::string(kernel_name(SweepKernel::kScalar)) == "scalar");
  CHECK(kernel_available(SweepKernel::kScalar, 2));
  CHECK(kernel_available(SweepKernel::kReference, 2));
  // auto must resolve to an indexed kernel, never the slow reference path
  CHECK(resolve_kernel(SweepKernel::kAuto, 2) != SweepKernel::kReference);
}

TEST_CASE("constant fields map to exactly zero") {
  GridSpec g = GridSpec::square(2, 4.0, 33);
  DirectionSet dirs = DirectionSet::uniform(2, 32);
  Sweep sweep(g, dirs, 0.75, 0.1);
  std::vector<double> u(g.num_nodes(), 3.25), out;
  // Indexed kernels subtract node values before weighting, so a constant is
  // annihilated bit-exactly.
  for (SweepKernel k : {SweepKernel::kScalar, SweepKernel::kAuto}) {
    sweep.apply(u, 3.25, out, k);
    CHECK(sup_abs(out) == 0.0);
  }
  // The reference path re-evaluates samples through the field's own
  // interpolation, which rounds independently; only ulp-level residue is
  // allowed there.
  sweep.apply(u, 3.25, out, SweepKernel::kReference);
  CHECK(sup_abs(out) <= 1e-13);
}

TEST_CASE("indexed kernels agree with the reference evaluation") {
  DirectionSet dirs = DirectionSet::uniform(2, 48);
  for (double eps : {0.3, 0.05}) {  // fold inactive / active
    GridSpec g = GridSpec::square(2, 4.0, 49);
    Sweep sweep(g, dirs, 0.75, eps);
    std::vector<double> u = random_values(g.num_nodes(), 99), ref, sc, fast;
    sweep.apply(u, 0.0, ref, SweepKernel::kReference);
    sweep.apply(u, 0.0, sc, SweepKernel::kScalar);
    const double scale = std::max(1.0, sup_abs(ref));
    CHECK(sup_abs_diff(ref, sc) <= 1e-11 * scale);
    if (kernel_available(SweepKernel::kAvx2, 2)) {
      sweep.apply(u, 0.0, fast, SweepKernel::kAvx2);
      CHECK(sup_abs_diff(sc, fast) <= 1e-12 * scale);
    }
    if (kernel_available(SweepKernel::kNeon, 2)) {
      sweep.apply(u, 0.0, fast, SweepKernel::kNeon);
      CHECK(sup_abs_diff(sc, fast) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("kernel agreement in one and three dimensions") {
  {
    GridSpec g = GridSpec::square(1, 4.0, 129);
    DirectionSet dirs = DirectionSet::uniform(1, 2);
    Sweep sweep(g, dirs, 0.75, 0.05);
    std::vector<double> u = random_values(g.num_nodes(), 7), ref, sc;
    sweep.apply(u, 0.0, ref, SweepKernel::kReference);
    sweep.apply(u, 0.0, sc, SweepKernel::kScalar);
    CHECK(sup_abs_diff(ref, sc) <= 1e-11 * std::max(1.0, sup_abs(ref)));
  }
  {
    GridSpec g = GridSpec::square(3, 2.0, 17);
    DirectionSet dirs = DirectionSet::uniform(3, 32);
    Sweep sweep(g, dirs, 0.75, 0.1);
    std::vector<double> u = random_values(g.num_nodes(), 13), ref, sc;
    sweep.apply(u, 0.0, ref, SweepKernel::kReference);
    sweep.apply(u, 0.0, sc, SweepKernel::kScalar);
    CHECK(sup_abs_diff(ref, sc) <= 1e-11 * std::max(1.0, sup_abs(ref)));
  }
}

TEST_CASE("whole-cell translation commutes bit-for-bit") {
  GridSpec g = GridSpec::square(2, 6.0, 49);
  DirectionSet dirs = DirectionSet::uniform(2, 32);
  Sweep sweep(g, dirs, 0.75, 0.1);

  AnalyticField m = catalog_field("mollifier", 2);
  std::vector<double> u(g.num_nodes());
  for (std::size_t k = 0; k < u.size(); ++k)
    u[k] = m.eval(g.point(g.unravel(k)));

  std::vector<double> us(u.size(), 0.0);
  for (int i = 2; i < g.n[0]; ++i)
    for (int j = 1; j < g.n[1]; ++j)
      us[g.linear({i, j, 0})] = u[g.linear({i - 2, j - 1, 0})];

  std::vector<double> lu, lus;
  sweep.apply(u, 0.0, lu, SweepKernel::kScalar);
  sweep.apply(us, 0.0, lus, SweepKernel::kScalar);
  double worst = 0.0;
  for (int i = 2; i < g.n[0]; ++i)
    for (int j = 1; j < g.n[1]; ++j)
      worst = std::max(worst, std::abs(lus[g.linear({i, j, 0})] -
                                       lu[g.linear({i - 2, j - 1, 0})]));
  CHECK(worst == 0.0);
}

TEST_CASE("near-field fold: closed-form weight, floor, and mass deficit") {
  GridSpec g = GridSpec::square(2, 4.0, 96);
  DirectionSet dirs = DirectionSet::uniform(2, 8);
  const double s = 0.75, eps = 0.05;
  Sweep sweep(g, dirs, s, eps);

  const double hmax = std::max(g.h(0), g.h(1));
  const double cap = 1.5 * hmax;
  REQUIRE(eps < cap);  // fold must be active in this configuration
  const double floor = sweep.near_floor();
  CHECK(floor > cap * (1.0 - 1e-12));
  CHECK(floor < cap * std::pow(10.0, 1.0 / 16.0) + 1e-12);

  const double q_expect =
      (std::pow(floor, 2.0 - 2.0 * s) - std::pow(eps, 2.0 - 2.0 * s)) /
      ((2.0 - 2.0 * s) * floor * floor);
  CHECK(sweep.near_weight() == doctest::Approx(q_expect).epsilon(1e-13));

  // the folded model carries strictly less mass than the raw measure
  CHECK(sweep.quadrature_mass() < sweep.total_mass());
  CHECK(sweep.total_mass() ==
        doctest::Approx(tail_weight(eps, s)).epsilon(1e-13));
  // and what it carries is the far part plus exactly the folded weight
  CHECK(sweep.quadrature_mass() - sweep.near_weight() ==
        doctest::Approx(tail_weight(floor, s)).epsilon(1e-10));
}

TEST_CASE("near-field fold is inactive for well-resolved truncation radii") {
  GridSpec g = GridSpec::square(2, 6.0, 64);
  DirectionSet dirs = DirectionSet::uniform(2, 8);
  Sweep sweep(g, dirs, 0.75, 0.3);
  CHECK(sweep.near_weight() == 0.0);
  CHECK(sweep.near_floor() == 0.3);
  CHECK(sweep.quadrature_mass() ==
        doctest::Approx(sweep.total_mass()).epsilon(1e-12));

  SweepOptions off;
  off.near_cap_cells = 0.0;  // disabled even where it would engage
  GridSpec g2 = GridSpec::square(2, 4.0, 96);
  Sweep sweep2(g2, dirs, 0.75, 0.05, off);
  CHECK(sweep2.near_weight() == 0.0);
  CHECK(sweep2.near_floor() == 0.05);
}

TEST_CASE("sweep agrees with the direct operator evaluation") {
  GridSpec g = GridSpec::square(2, 4.0, 97);
  DirectionSet dirs = DirectionSet::uniform(2, 64);
  const double eps = 0.1;
  Sweep sweep(g, dirs, 0.75, eps);

  AnalyticField f = catalog_field("gaussian", 2);
  std::vector<double> u(g.num_nodes());
  for (std::size_t k = 0; k < u.size(); ++k)
    u[k] = f.eval(g.point(g.unravel(k)));
  std::vector<double> lu;
  sweep.apply(u, 0.0, lu, SweepKernel::kScalar);

  OperatorConfig cfg;
  cfg.dirs = dirs;
  cfg.quad.eps = eps;
  cfg.quad.cut = sweep.cut_radius();
  for (std::array<int, 3> idx : {std::array<int, 3>{72, 48, 0},
                                 std::array<int, 3>{48, 48, 0},
                                 std::array<int, 3>{60, 36, 0}}) {
    const Vec x = g.point(idx);
    const double direct = l_eps(f, x, cfg);
    // interpolation and stencil-gradient differences bound the gap
    CHECK(std::abs(lu[g.linear(idx)] - direct) <= 0.1);
  }
}

TEST_CASE("grid-stencil node gradient") {
  GridSpec g = GridSpec::square(2, 2.0, 21);
  std::vector<double> u(g.num_nodes());
  for (std::size_t k = 0; k < u.size(); ++k) {
    const Vec x = g.point(g.unravel(k));
    u[k] = 3.0 * x[0] - 2.0 * x[1];
  }
  Vec grad = node_gradient(g, u, {10, 10, 0});
  CHECK(grad[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(grad[1] == doctest::Approx(-2.0).epsilon(1e-12));
  // one-sided at the faces
  Vec ge = node_gradient(g, u, {0, 10, 0});
  CHECK(ge[0] == doctest::Approx(3.0).epsilon(1e-12));
}
