#include <doctest.h>

#include <cmath>

#include "ifl/catalog.hpp"
#include "ifl/operators.hpp"
#include "ifl/scheme.hpp"

using namespace ifl;

TEST_CASE("stable step closed form") {
  for (double s : {0.6, 0.75, 0.9})
    for (double eps : {0.05, 0.1, 0.3})
      CHECK(cfl_tau(s, eps, 1.0) ==
            doctest::Approx(s * std::pow(eps, 2.0 * s) / cs_constant(s))
                .epsilon(1e-14));
  CHECK(cfl_tau(0.75, 0.1, 0.5) ==
        doctest::Approx(0.5 * cfl_tau(0.75, 0.1, 1.0)).epsilon(1e-15));
}

TEST_CASE("zero horizon returns the datum unchanged") {
  GridSpec g = GridSpec::square(2, 4.0, 33);
  SampledField u0 = SampledField::sample(
      g, catalog_field("gaussian", 2), ExtensionPolicy::constant_far_field(0.0));
  SchemeConfig cfg;
  cfg.T = 0.0;
  EvolveResult r = evolve(u0, cfg);
  CHECK(r.steps == 0);
  REQUIRE(r.final.values().size() == u0.values().size());
  for (std::size_t k = 0; k < u0.values().size(); ++k)
    CHECK(r.final.values()[k] == u0.values()[k]);
}

TEST_CASE("constant data are fixed points") {
  GridSpec g = GridSpec::square(2, 4.0, 33);
  SampledField one = SampledField::sample(
      g, catalog_field("constant", 2, 1.0),
      ExtensionPolicy::constant_far_field(1.0));
  SchemeConfig cfg;
  cfg.T = 0.2;
  cfg.snapshot_times = {0.1};
  EvolveResult r = evolve(one, cfg);
  CHECK(r.steps > 0);
  for (double v : r.final.values()) CHECK(std::abs(v - 1.0) <= 1e-14);
  for (double v : r.snapshots[0].values()) CHECK(std::abs(v - 1.0) <= 1e-14);
}

TEST_CASE("nodewise linear time interpolation") {
  GridSpec g = GridSpec::square(2, 1.0, 5);
  SampledField a(g, ExtensionPolicy::constant_far_field(0.0));
  SampledField b(g, ExtensionPolicy::constant_far_field(0.0));
  for (std::size_t k = 0; k < a.values().size(); ++k) {
    a.values()[k] = static_cast<double>(k);
    b.values()[k] = 2.0 * static_cast<double>(k) + 1.0;
  }
  SampledField m = interpolate_time(a, b, 1.0, 3.0, 1.5);
  for (std::size_t k = 0; k < m.values().size(); ++k)
    CHECK(m.values()[k] ==
          doctest::Approx(0.75 * a.values()[k] + 0.25 * b.values()[k])
              .epsilon(1e-15));
}

TEST_CASE("two-value datum pins the stability threshold exactly") {
  // Sea of +1 with a single -1 node: every quadrature sample interpolates
  // the sea, so one step lands at -1 + 2*theta exactly. No overshoot at the
  // critical step, overshoot 2(theta-1) at 20% past it.
  GridSpec g = GridSpec::square(2, 6.0, 64);
  SampledField spike(g, ExtensionPolicy::constant_far_field(1.0));
  for (double& v : spike.values()) v = 1.0;
  spike.values()[g.linear({32, 32, 0})] = -1.0;

  auto overshoot = [&](double theta) {
    SchemeConfig cfg;
    cfg.eps = 0.3;
    cfg.theta = theta;
    cfg.T = cfl_tau(0.75, 0.3, theta);
    EvolveResult r = evolve(spike, cfg);
    double over = 0.0;
    for (const StepMonitor& m : r.monitors)
      over = std::max({over, m.max_value - 1.0, -1.0 - m.min_value});
    return over;
  };
  CHECK(overshoot(1.0) <= 1e-12);
  CHECK(overshoot(1.2) == doctest::Approx(0.4).epsilon(1e-10));
}

TEST_CASE("range preservation and comparison on a short run") {
  GridSpec g = GridSpec::square(2, 4.0, 33);
  AnalyticField gauss = catalog_field("gaussian", 2);
  AnalyticField half(2, [&gauss](const Vec& x) { return 0.5 * gauss.eval(x); });
  half.with_constant_beyond(7.0);
  SampledField b0 = SampledField::sample(
      g, gauss, ExtensionPolicy::constant_far_field(0.0));
  SampledField a0 = SampledField::sample(
      g, half, ExtensionPolicy::constant_far_field(0.0));
  SchemeConfig cfg;
  cfg.T = 0.12;
  EvolveResult rb = evolve(b0, cfg);
  EvolveResult ra = evolve(a0, cfg);

  double bmax = 0.0;
  for (double v : b0.values()) bmax = std::max(bmax, v);
  for (const StepMonitor& m : rb.monitors) {
    CHECK(m.max_value <= bmax + 1e-12);
    CHECK(m.min_value >= 0.0 - 1e-12);
    // The step-0 entry records the initial state and carries tau = 0.
    CHECK((m.step == 0 ? m.tau == 0.0 : m.tau > 0.0));
    CHECK(std::isfinite(m.mass));
  }
  // ordered data stay ordered
  double worst = -1e300;
  for (std::size_t k = 0; k < ra.final.values().size(); ++k)
    worst = std::max(worst, ra.final.values()[k] - rb.final.values()[k]);
  CHECK(worst <= 1e-12);
}

TEST_CASE("snapshots are served inside the datum range") {
  GridSpec g = GridSpec::square(2, 4.0, 33);
  SampledField u0 = SampledField::sample(
      g, catalog_field("mollifier", 2), ExtensionPolicy::constant_far_field(0.0));
  SchemeConfig cfg;
  cfg.T = 0.15;
  cfg.snapshot_times = {0.04, 0.1, 0.15};
  EvolveResult r = evolve(u0, cfg);
  REQUIRE(r.snapshots.size() == 3);
  CHECK(r.snapshot_times[2] == 0.15);
  for (const SampledField& s : r.snapshots)
    for (double v : s.values()) {
      CHECK(v >= -1e-12);
      CHECK(v <= 1.0 + 1e-12);
    }
}

TEST_CASE("a-priori time modulus shape") {
  std::vector<double> dts{0.01, 0.04};
  std::vector<double> m = monitor_apriori(0.5, 2.0, 0.75, dts);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == doctest::Approx(2.0 * std::pow(0.01, 0.5 / 1.5)).epsilon(1e-12));
  CHECK(m[1] / m[0] == doctest::Approx(std::pow(4.0, 1.0 / 3.0)).epsilon(1e-12));
}
