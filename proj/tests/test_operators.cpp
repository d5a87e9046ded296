#include <doctest.h>

#include <cmath>
#include <random>

#include "ifl/catalog.hpp"
#include "ifl/operators.hpp"
#include "ifl/radial.hpp"
#include "reference_values.hpp"

using namespace ifl;

TEST_CASE("normalization constant against oracle values") {
  CHECK(cs_constant(0.5001) ==
        doctest::Approx(refvals::kCs_0_5001).epsilon(1e-13));
  CHECK(cs_constant(0.51) == doctest::Approx(refvals::kCs_0_51).epsilon(1e-13));
  CHECK(cs_constant(0.6) == doctest::Approx(refvals::kCs_0_6).epsilon(1e-13));
  CHECK(cs_constant(0.75) == doctest::Approx(refvals::kCs_0_75).epsilon(1e-13));
  CHECK(cs_constant(0.9) == doctest::Approx(refvals::kCs_0_9).epsilon(1e-13));
  CHECK(cs_constant(0.99) == doctest::Approx(refvals::kCs_0_99).epsilon(1e-13));
}

TEST_CASE("normalization constant matches its gamma-function closed form") {
  const double cs = std::pow(4.0, 0.75) * 0.75 * refvals::kGamma_1_25 /
                    (std::sqrt(M_PI) * refvals::kGamma_0_25);
  CHECK(cs_constant(0.75) == doctest::Approx(cs).epsilon(1e-13));
}

TEST_CASE("uniform bound constant against oracle values") {
  CHECK(uniform_bound_constant(0.6) ==
        doctest::Approx(refvals::kUnifC_0_6).epsilon(1e-12));
  CHECK(uniform_bound_constant(0.75) ==
        doctest::Approx(refvals::kUnifC_0_75).epsilon(1e-12));
  CHECK(uniform_bound_constant(0.9) ==
        doctest::Approx(refvals::kUnifC_0_9).epsilon(1e-12));
}

TEST_CASE("1D operator of a gaussian against oracle values") {
  AnalyticField g = even_extension(gaussian_profile());
  QuadRule rule;
  rule.cut = 12.0;
  CHECK(frac_lap_1d(g, 0.0, 0.75, rule) ==
        doctest::Approx(refvals::kFlapGauss_0).epsilon(1e-8));
  CHECK(frac_lap_1d(g, 0.5, 0.75, rule) ==
        doctest::Approx(refvals::kFlapGauss_0_5).epsilon(1e-8));
  CHECK(frac_lap_1d(g, 1.0, 0.75, rule) ==
        doctest::Approx(refvals::kFlapGauss_1).epsilon(1e-8));
  CHECK(frac_lap_1d(g, 2.0, 0.75, rule) ==
        doctest::Approx(refvals::kFlapGauss_2).epsilon(1e-8));
}

TEST_CASE("operator annihilates constants") {
  AnalyticField c = catalog_field("constant", 2, 2.5);
  OperatorConfig cfg;
  OperatorEval ev = evaluate_operator(c, vec2(0.7, -1.2), cfg);
  CHECK(std::abs(ev.l_eps) <= 1e-14);
  CHECK(std::abs(ev.value) <= 1e-14);
  CHECK(std::abs(ev.plus) <= 1e-14);
  CHECK(std::abs(ev.minus) <= 1e-14);
}

TEST_CASE("structural ordering of the branch values") {
  std::mt19937_64 rng(3);
  auto unif = [&](double lo, double hi) {
    return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
  };
  AnalyticField g = catalog_field("gaussian", 2);
  AnalyticField a = catalog_field("annulus", 2);
  OperatorConfig cfg;
  cfg.quad.cut = 40.0;
  for (int i = 0; i < 20; ++i) {
    Vec x = vec2(unif(-4.0, 4.0), unif(-4.0, 4.0));
    OperatorEval ev = evaluate_operator(g, x, cfg);
    CHECK(ev.minus <= ev.value + 1e-10);
    CHECK(ev.value <= ev.plus + 1e-10);

    Vec xa = vec2(unif(-12.0, 12.0), unif(-12.0, 12.0));
    const double r = norm(xa, 2);
    if (std::abs(r - 9.0) < 0.3 || std::abs(r - 11.0) < 0.3) continue;
    OperatorEval ea = evaluate_operator(a, xa, cfg);
    CHECK(ea.minus <= ea.value + 1e-10);
    CHECK(ea.value <= ea.plus + 1e-10);
  }
}

TEST_CASE("gradient branch detection and maximizing direction") {
  AnalyticField g = catalog_field("gaussian", 2);
  OperatorConfig cfg;
  OperatorEval at0 = evaluate_operator(g, vec2(0.0, 0.0), cfg);
  CHECK(at0.zero_gradient);

  OperatorEval at1 = evaluate_operator(g, vec2(1.0, 0.0), cfg);
  CHECK(!at1.zero_gradient);
  CHECK(at1.grad[0] == doctest::Approx(-2.0 * std::exp(-1.0)).epsilon(1e-6));
  CHECK(std::abs(at1.grad[1]) <= 1e-8);
  // moving toward the bump raises the field: the maximizing ray points back
  CHECK(at1.arg_sup[0] <= -0.99);
}

TEST_CASE("wrappers agree with the full evaluation") {
  AnalyticField g = catalog_field("gaussian", 2);
  OperatorConfig cfg;
  const Vec x = vec2(0.8, -0.3);
  OperatorEval ev = evaluate_operator(g, x, cfg);
  CHECK(l_eps(g, x, cfg) == ev.l_eps);
  CHECK(ifl::ifl(g, x, cfg) == ev.value);
  CHECK(ifl_plus(g, x, cfg) == ev.plus);
  CHECK(ifl_minus(g, x, cfg) == ev.minus);
}

TEST_CASE("truncation error contracts at the expected rate") {
  AnalyticField g = catalog_field("gaussian", 2);
  const Vec x = vec2(1.0, 0.0);
  std::vector<double> errs;
  for (int k = 0; k <= 3; ++k) {
    OperatorConfig cfg;
    cfg.quad.eps = 0.1 * std::pow(2.0, -k);
    cfg.quad.cut = 12.0;
    OperatorEval ev = evaluate_operator(g, x, cfg);
    errs.push_back(std::abs(ev.l_eps - ev.value));
  }
  const double expected = std::pow(2.0, 2.0 * 0.75 - 2.0);  // 2^(2s-2)
  for (std::size_t k = 0; k + 1 < errs.size(); ++k)
    CHECK(errs[k + 1] / errs[k] == doctest::Approx(expected).epsilon(0.05));
}

TEST_CASE("radial reduction to the 1D operator") {
  RadialProfile p = gaussian_profile();
  std::vector<Vec> probes{vec2(0.0, 0.0), vec2(0.35355339059327373, 0.35355339059327373),
                          vec2(-0.6, 0.8), vec2(2.0, 0.0)};
  OperatorConfig cfg;
  cfg.quad.cut = 12.0;
  QuadRule rule_1d;
  rule_1d.cut = 12.0;
  ReductionCheck rc = check_reduction(p, 2, probes, cfg, rule_1d);
  CHECK(rc.max_abs_diff <= 1e-6);
  REQUIRE(rc.radii.size() == 4);
  CHECK(rc.radii[0] == doctest::Approx(0.0));
  CHECK(rc.radii[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("uniform bound with the derived constant") {
  AnalyticField g = catalog_field("gaussian", 2);
  const double G = std::sqrt(2.0) * std::exp(-0.5);
  const double H = 2.0;
  std::mt19937_64 rng(5);
  auto unif = [&](double lo, double hi) {
    return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
  };
  for (double s : {0.6, 0.75, 0.9}) {
    OperatorConfig cfg;
    cfg.s = s;
    cfg.quad.cut = 12.0;
    const double cap = uniform_bound_constant(s) * std::pow(G, 2.0 - 2.0 * s) *
                       std::pow(H, 2.0 * s - 1.0);
    for (int i = 0; i < 10; ++i) {
      Vec x = vec2(unif(-3.0, 3.0), unif(-3.0, 3.0));
      OperatorEval ev = evaluate_operator(g, x, cfg);
      CHECK(std::max({std::abs(ev.l_eps), std::abs(ev.value), std::abs(ev.plus),
                      std::abs(ev.minus)}) <= cap * (1.0 + 1e-8));
    }
  }
}
