#include "ifl/radial.hpp"

#include <cmath>
#include <utility>

#include "ifl/spline.hpp"

namespace ifl {

AnalyticField lift_radial(const RadialProfile& p, int dim) {
  auto f = p.f;
  AnalyticField field(dim, [f, dim](const Vec& x) { return f(norm(x, dim)); });
  field.with_far_value(p.far_value);
  if (p.constant_beyond > 0.0) field.with_constant_beyond(p.constant_beyond);
  if (!p.jump_radii.empty()) field.with_jump_radii(p.jump_radii);
  return field;
}

AnalyticField even_extension(const RadialProfile& p) {
  auto f = p.f;
  AnalyticField field(1, [f](const Vec& x) { return f(std::fabs(x[0])); });
  field.with_far_value(p.far_value);
  if (p.constant_beyond > 0.0) field.with_constant_beyond(p.constant_beyond);
  if (!p.jump_radii.empty()) field.with_jump_radii(p.jump_radii);
  return field;
}

AnalyticField lift_profile_x1(std::function<double(double)> phi, int dim,
                              double lo, double hi) {
  auto fn = std::move(phi);
  AnalyticField field(dim, [fn](const Vec& x) { return fn(x[0]); });
  if (lo == hi) field.with_far_value(lo);
  field.with_ray_far_value([fn, lo, hi](const Vec& x, const Vec& y) {
    if (y[0] > 0.0) return hi;
    if (y[0] < 0.0) return lo;
    return fn(x[0]);  // constant along tangential rays
  });
  return field;
}

AnalyticField classical_solution(const RadialProfile& p, const Kernel1D& k,
                                 double t, int dim,
                                 const ClassicalSolutionOptions& opt) {
  require(p.nonincreasing, "classical_solution: datum must be radially nonincreasing");
  require(t >= 0.0, "classical_solution: t must be nonnegative");
  if (t == 0.0) return lift_radial(p, dim);

  ConvProfile u0;
  auto f = p.f;
  u0.f = [f](double y) { return f(std::fabs(y)); };
  u0.left_limit = u0.right_limit = p.far_value;
  u0.window = opt.window;
  for (double r : p.jump_radii) {
    u0.breakpoints.push_back(-r);
    u0.breakpoints.push_back(r);
  }

  const std::size_t n = static_cast<std::size_t>(std::llround(opt.r_table / opt.dr)) + 1;
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = convolve_point(k, u0, i * opt.dr, t);
  // end slopes: zero at the center by evenness, one-sided difference outside
  const double fd_h = 1e-4;
  const double r_end = (n - 1) * opt.dr;
  const double d_end =
      (convolve_point(k, u0, r_end + fd_h, t) - convolve_point(k, u0, r_end - fd_h, t)) /
      (2.0 * fd_h);
  auto spline = std::make_shared<CubicSpline>(0.0, opt.dr, std::move(w), 0.0, d_end);

  AnalyticField field(dim, [spline, dim](const Vec& x) { return (*spline)(norm(x, dim)); });
  field.with_far_value(p.far_value);
  return field;
}

ReductionCheck check_reduction(const RadialProfile& p, int dim,
                               const std::vector<Vec>& probes,
                               const OperatorConfig& cfg, const QuadRule& rule_1d) {
  ReductionCheck out;
  const AnalyticField lifted = lift_radial(p, dim);
  const AnalyticField even = even_extension(p);
  for (const Vec& x : probes) {
    const double r = norm(x, dim);
    OperatorConfig probe_cfg = cfg;
    if (r == 0.0) probe_cfg.grad = GradMode::kForceZero;
    const double nd = evaluate_operator(lifted, x, probe_cfg).value;
    const double od = frac_lap_1d(even, r, cfg.s, rule_1d);
    out.radii.push_back(r);
    out.lhs.push_back(nd);
    out.rhs.push_back(od);
    out.max_abs_diff = std::max(out.max_abs_diff, std::fabs(nd - od));
  }
  return out;
}

}  // namespace ifl
