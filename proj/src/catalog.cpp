#include "ifl/catalog.hpp"

#include <cmath>
#include <utility>

#include "ifl/math_util.hpp"

namespace ifl {

RadialProfile gaussian_profile(double w) {
  require(w > 0.0, "gaussian_profile: width must be positive");
  RadialProfile p;
  p.f = [w](double r) { return std::exp(-(r / w) * (r / w)); };
  p.nonincreasing = true;
  p.far_value = 0.0;
  // exp(-(r/w)^2) < 2^-60 once (r/w)^2 > 42
  p.constant_beyond = 6.5 * w;
  return p;
}

RadialProfile mollifier_profile(double r0) {
  require(r0 > 0.0, "mollifier_profile: radius must be positive");
  RadialProfile p;
  p.f = [r0](double r) {
    if (r >= r0) return 0.0;
    return std::exp(1.0 - r0 * r0 / (r0 * r0 - r * r));
  };
  p.nonincreasing = true;
  p.far_value = 0.0;
  p.constant_beyond = r0;
  return p;
}

RadialProfile annulus_profile(double r_in, double r_out) {
  require(0.0 < r_in && r_in < r_out, "annulus_profile: need 0 < r_in < r_out");
  RadialProfile p;
  p.f = [r_in, r_out](double r) { return (r >= r_in && r <= r_out) ? 1.0 : 0.0; };
  p.nonincreasing = false;
  p.far_value = 0.0;
  p.constant_beyond = r_out;
  p.jump_radii = {r_in, r_out};
  return p;
}

RadialProfile cusp_profile(double beta) {
  require(beta > 0.0 && beta < 1.0, "cusp_profile: exponent must lie in (0,1)");
  RadialProfile p;
  p.f = [beta](double r) {
    double v = 1.0 - std::pow(r, beta);
    return v > 0.0 ? v : 0.0;
  };
  p.nonincreasing = true;
  p.far_value = 0.0;
  p.constant_beyond = 1.0;
  return p;
}

namespace {

// Quintic blend h with h(0)=1, h'(0)=2, h''(0)=2 (matching r^2 at r=1) and
// h(1)=h'(1)=h''(1)=0, so the cap below is C^2 with compact support.
double cap_blend(double t) {
  return 1.0 + t * (2.0 + t * (1.0 + t * (-25.0 + t * (34.0 - 13.0 * t))));
}

double cap_blend_dd(double t) {
  return 2.0 + t * (-150.0 + t * (408.0 - 260.0 * t));
}

}  // namespace

RadialProfile cap_profile() {
  RadialProfile p;
  p.f = [](double r) {
    if (r <= 1.0) return r * r;
    if (r >= 2.0) return 0.0;
    return cap_blend(r - 1.0);
  };
  p.nonincreasing = false;
  p.far_value = 0.0;
  p.constant_beyond = 2.0;
  return p;
}

double cap_hessian_sup() {
  // |f''| = 2 on [0,1]; on the blend, stationary points of h'' solve
  // h''' = -150 + 816 t - 780 t^2 = 0.
  double best = 2.0;
  double disc = 816.0 * 816.0 - 4.0 * 780.0 * 150.0;
  double sq = std::sqrt(disc);
  for (double t : {0.0, 1.0, (816.0 - sq) / 1560.0, (816.0 + sq) / 1560.0}) {
    if (t < 0.0 || t > 1.0) continue;
    best = std::max(best, std::abs(cap_blend_dd(t)));
  }
  return best;
}

AnalyticField catalog_field(const std::string& name, int dim, double param) {
  require(dim >= 1 && dim <= 3, "catalog_field: dim must be 1, 2, or 3");
  if (name == "constant") {
    double c = (param == 0.0) ? 1.0 : param;
    AnalyticField f(dim, [c](const Vec&) { return c; });
    f.with_far_value(c).with_constant_beyond(1.0);
    return f;
  }
  if (name == "gaussian") {
    return lift_radial(gaussian_profile(param == 0.0 ? 1.0 : param), dim);
  }
  if (name == "mollifier") {
    return lift_radial(mollifier_profile(param == 0.0 ? 2.0 : param), dim);
  }
  if (name == "annulus") {
    return lift_radial(annulus_profile(), dim);
  }
  if (name == "cusp") {
    return lift_radial(cusp_profile(param == 0.0 ? 0.5 : param), dim);
  }
  if (name == "cap") {
    return lift_radial(cap_profile(), dim);
  }
  if (name == "tanh-x1") {
    return lift_profile_x1([](double v) { return std::tanh(v); }, dim, -1.0, 1.0);
  }
  if (name == "even-x1") {
    return lift_profile_x1([](double v) { return std::exp(-v * v); }, dim, 0.0, 0.0);
  }
  if (name == "tilted-bump") {
    AnalyticField f(dim, [dim](const Vec& x) {
      double q = (x[0] - 0.3) * (x[0] - 0.3);
      if (dim >= 2) q += 2.0 * (x[1] + 0.2) * (x[1] + 0.2);
      if (dim >= 3) q += 1.5 * (x[2] - 0.1) * (x[2] - 0.1);
      return std::exp(-q);
    });
    f.with_far_value(0.0).with_constant_beyond(8.0);
    return f;
  }
  require(false, "catalog_field: unknown field name '" + name + "'");
  return AnalyticField(dim, [](const Vec&) { return 0.0; });
}

std::vector<std::string> catalog_names() {
  return {"constant", "gaussian",  "mollifier", "annulus",    "cusp",
          "cap",      "tanh-x1",   "even-x1",   "tilted-bump"};
}

}  // namespace ifl
