#include "ifl/scheme.hpp"

#include <algorithm>
#include <cmath>

#include "ifl/operators.hpp"

namespace ifl {

double cfl_tau(double s, double eps, double theta) {
  require(theta > 0.0, "cfl_tau: theta must be positive");
  return theta * s * std::pow(eps, 2.0 * s) / cs_constant(s);
}

void scheme_step(const Sweep& sweep, const std::vector<double>& u, double far_c,
                 double tau, SweepKernel kernel, int threads,
                 std::vector<double>& l_buf, std::vector<double>& out) {
  sweep.apply(u, far_c, l_buf, kernel, threads);
  out.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + tau * l_buf[i];
}

namespace {

StepMonitor make_monitor(const GridSpec& g, const std::vector<double>& u,
                         const std::vector<double>& u_prev,
                         const std::vector<double>& u0, double far_c, int step,
                         double t, double tau) {
  StepMonitor m;
  m.step = step;
  m.t = t;
  m.tau = tau;
  double cell = 1.0;
  for (int a = 0; a < g.dim; ++a) cell *= g.h(a);
  double mn = u[0], mx = u[0], mass = 0.0, drift = 0.0, change = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    mn = std::min(mn, u[i]);
    mx = std::max(mx, u[i]);
    mass += u[i] - far_c;
    change = std::max(change, std::fabs(u[i] - u_prev[i]));
    if (g.boundary_node(g.unravel(i)))
      drift = std::max(drift, std::fabs(u[i] - u0[i]));
  }
  m.min_value = mn;
  m.max_value = mx;
  m.mass = mass * cell;
  m.boundary_drift = drift;
  m.step_change = change;
  return m;
}

}  // namespace

EvolveResult evolve(const SampledField& u0, const SchemeConfig& cfg) {
  require(u0.policy().mode == Extension::kConstantFarField,
          "evolve: initial state must carry a constant far field");
  const GridSpec& g = u0.grid();
  const double far_c = u0.policy().constant;
  const DirectionSet dirs = DirectionSet::uniform(g.dim, cfg.n_dir);
  const Sweep sweep(g, dirs, cfg.s, cfg.eps, cfg.sweep);
  const SweepKernel kernel = resolve_kernel(cfg.kernel, g.dim);
  const double tau = cfl_tau(cfg.s, cfg.eps, cfg.theta);
  require(cfg.T >= 0.0, "evolve: T must be nonnegative");

  std::vector<double> snap_times = cfg.snapshot_times;
  std::sort(snap_times.begin(), snap_times.end());

  EvolveResult res{SampledField(g, u0.policy(), u0.values()), {}, {}, {}, tau, 0, kernel};
  std::vector<double> u = u0.values();
  std::vector<double> u_next, l_buf;

  std::size_t next_snap = 0;
  auto emit_snaps_upto = [&](const std::vector<double>& ua,
                             const std::vector<double>& ub, double ta, double tb) {
    while (next_snap < snap_times.size() && snap_times[next_snap] <= tb + 1e-12) {
      const double t = std::min(snap_times[next_snap], tb);
      const double lam = tb > ta ? (t - ta) / (tb - ta) : 0.0;
      std::vector<double> v(ua.size());
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = ua[i] + lam * (ub[i] - ua[i]);
      res.snapshots.emplace_back(g, u0.policy(), std::move(v));
      res.snapshot_times.push_back(t);
      ++next_snap;
    }
  };

  // Serve snapshot requests at (or before) time zero.
  while (next_snap < snap_times.size() && snap_times[next_snap] <= 0.0) {
    res.snapshots.emplace_back(g, u0.policy(), std::vector<double>(u));
    res.snapshot_times.push_back(0.0);
    ++next_snap;
  }
  res.monitors.push_back(make_monitor(g, u, u, u0.values(), far_c, 0, 0.0, 0.0));

  double t = 0.0;
  int step = 0;
  while (t < cfg.T - 1e-12 * std::max(1.0, cfg.T)) {
    const double tau_j = std::min(tau, cfg.T - t);
    scheme_step(sweep, u, far_c, tau_j, kernel, cfg.threads, l_buf, u_next);
    const double t_next = std::min(t + tau_j, cfg.T);
    emit_snaps_upto(u, u_next, t, t_next);
    ++step;
    res.monitors.push_back(
        make_monitor(g, u_next, u, u0.values(), far_c, step, t_next, tau_j));
    u.swap(u_next);
    t = t_next;
  }
  // Snapshot requests beyond T clamp to the final state.
  emit_snaps_upto(u, u, t, t);
  while (next_snap < snap_times.size()) {
    res.snapshots.emplace_back(g, u0.policy(), std::vector<double>(u));
    res.snapshot_times.push_back(t);
    ++next_snap;
  }

  res.final = SampledField(g, u0.policy(), std::move(u));
  res.steps = step;
  return res;
}

SampledField interpolate_time(const SampledField& a, const SampledField& b,
                              double ta, double tb, double t) {
  require(a.grid().same_layout(b.grid()), "interpolate_time: layout mismatch");
  require(tb > ta, "interpolate_time: need ta < tb");
  const double lam = (t - ta) / (tb - ta);
  std::vector<double> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = a.values()[i] + lam * (b.values()[i] - a.values()[i]);
  return SampledField(a.grid(), a.policy(), std::move(v));
}

std::vector<double> monitor_apriori(double beta, double seminorm, double s,
                                    const std::vector<double>& dts) {
  std::vector<double> out;
  out.reserve(dts.size());
  for (double dt : dts) out.push_back(seminorm * std::pow(dt, beta / (2.0 * s)));
  return out;
}

}  // namespace ifl
