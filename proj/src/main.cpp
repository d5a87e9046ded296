// Command-line front end: evaluate the operator at a point, march the
// evolution, tabulate the 1D kernel, or run the verification suites. Every
// command echoes its full configuration to a JSON file so runs are
// reproducible from their artifacts alone.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <list>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ifl/catalog.hpp"
#include "ifl/field_io.hpp"
#include "ifl/heat_kernel.hpp"
#include "ifl/math_util.hpp"
#include "ifl/operators.hpp"
#include "ifl/run_config.hpp"
#include "ifl/scheme.hpp"
#include "ifl/verify.hpp"

namespace {

using ifl::RunConfig;

class Timer {
 public:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

nlohmann::json config_json(const RunConfig& c) {
  return {{"s", c.s},
          {"dim", c.dim},
          {"datum", c.datum},
          {"datum-param", c.datum_param},
          {"half-width", c.half_width},
          {"nodes", c.nodes},
          {"eps", c.eps},
          {"n-dir", c.n_dir},
          {"panels-per-decade", c.panels_per_decade},
          {"nodes-per-panel", c.nodes_per_panel},
          {"grad-tol", c.grad_tol},
          {"theta", c.theta},
          {"T", c.horizon},
          {"snapshot-times", c.snapshot_times},
          {"out", c.out_dir},
          {"kernel", c.kernel},
          {"threads", c.threads},
          {"seed", c.seed},
          {"suite", c.suite},
          {"probe", c.probe}};
}

void write_json(const std::string& path, const nlohmann::json& j) {
  ifl::write_text(path, j.dump(2) + "\n");
}

// Per-subcommand flag storage plus the file-then-flags merge: defaults,
// then the config file, then explicitly passed flags in that order.
struct SubContext {
  CLI::App* app = nullptr;
  RunConfig flags;
  std::string config_path;
  bool quick = false;

  struct Binding {
    CLI::Option* opt;
    std::function<void(RunConfig&)> apply;
  };
  std::vector<Binding> binds;

  RunConfig resolve() const {
    RunConfig cfg;
    if (!config_path.empty()) ifl::apply_config_file(cfg, config_path);
    for (const Binding& b : binds)
      if (b.opt->count() > 0) b.apply(cfg);
    ifl::validate_config(cfg);
    return cfg;
  }
};

void add_common_flags(SubContext& c) {
  CLI::App* a = c.app;
  RunConfig& f = c.flags;
  auto bind = [&c](CLI::Option* o, std::function<void(RunConfig&)> apply) {
    c.binds.push_back({o, std::move(apply)});
  };
  a->add_option("--config", c.config_path,
                "configuration file with 'key = value' lines");
  bind(a->add_option("--s", f.s, "operator order parameter, in (1/2, 1)"),
       [&f](RunConfig& r) { r.s = f.s; });
  bind(a->add_option("--dim", f.dim, "space dimension (1, 2, or 3)"),
       [&f](RunConfig& r) { r.dim = f.dim; });
  bind(a->add_option("--datum", f.datum, "initial datum from the catalog"),
       [&f](RunConfig& r) { r.datum = f.datum; });
  bind(a->add_option("--datum-param", f.datum_param,
                     "datum shape parameter (0 = datum default)"),
       [&f](RunConfig& r) { r.datum_param = f.datum_param; });
  bind(a->add_option("--half-width", f.half_width,
                     "computational box is [-half-width, half-width]^dim"),
       [&f](RunConfig& r) { r.half_width = f.half_width; });
  bind(a->add_option("--nodes", f.nodes, "grid nodes per axis"),
       [&f](RunConfig& r) { r.nodes = f.nodes; });
  bind(a->add_option("--eps", f.eps, "inner truncation radius"),
       [&f](RunConfig& r) { r.eps = f.eps; });
  bind(a->add_option("--n-dir", f.n_dir, "directions for the sup/inf search"),
       [&f](RunConfig& r) { r.n_dir = f.n_dir; });
  bind(a->add_option("--panels-per-decade", f.panels_per_decade,
                     "radial quadrature panels per decade"),
       [&f](RunConfig& r) { r.panels_per_decade = f.panels_per_decade; });
  bind(a->add_option("--nodes-per-panel", f.nodes_per_panel,
                     "Gauss nodes per quadrature panel"),
       [&f](RunConfig& r) { r.nodes_per_panel = f.nodes_per_panel; });
  bind(a->add_option("--grad-tol", f.grad_tol,
                     "gradient magnitude below which a point is critical"),
       [&f](RunConfig& r) { r.grad_tol = f.grad_tol; });
  bind(a->add_option("--theta", f.theta,
                     "fraction of the stability-critical time step"),
       [&f](RunConfig& r) { r.theta = f.theta; });
  bind(a->add_option("--T", f.horizon, "evolution horizon"),
       [&f](RunConfig& r) { r.horizon = f.horizon; });
  bind(a->add_option("--snapshot-times", f.snapshot_times,
                     "comma-separated times to record")
           ->delimiter(','),
       [&f](RunConfig& r) { r.snapshot_times = f.snapshot_times; });
  bind(a->add_option("--out", f.out_dir, "output directory"),
       [&f](RunConfig& r) { r.out_dir = f.out_dir; });
  bind(a->add_option("--kernel", f.kernel,
                     "compute kernel: auto, reference, scalar, avx2, neon"),
       [&f](RunConfig& r) { r.kernel = f.kernel; });
  bind(a->add_option("--threads", f.threads, "worker threads"),
       [&f](RunConfig& r) { r.threads = f.threads; });
  bind(a->add_option("--seed", f.seed, "seed for randomized verification"),
       [&f](RunConfig& r) { r.seed = f.seed; });
  bind(a->add_option("--suite", f.suite,
                     "verification suite name, or 'all'"),
       [&f](RunConfig& r) { r.suite = f.suite; });
  bind(a->add_option("--probe", f.probe,
                     "evaluation point, comma-separated coordinates")
           ->delimiter(','),
       [&f](RunConfig& r) { r.probe = f.probe; });
}

ifl::AnalyticField resolve_datum(const RunConfig& cfg) {
  const auto names = ifl::catalog_names();
  if (std::find(names.begin(), names.end(), cfg.datum) == names.end()) {
    std::string all;
    for (const auto& n : names) all += (all.empty() ? "" : ", ") + n;
    throw ifl::ConfigError("unknown datum '" + cfg.datum + "' (known: " + all +
                           ")");
  }
  return ifl::catalog_field(cfg.datum, cfg.dim, cfg.datum_param);
}

ifl::Vec resolve_probe(const RunConfig& cfg) {
  if (static_cast<int>(cfg.probe.size()) > cfg.dim)
    throw ifl::ConfigError("probe has more coordinates than --dim");
  ifl::Vec x{};
  for (std::size_t i = 0; i < cfg.probe.size(); ++i) x[i] = cfg.probe[i];
  return x;
}

int cmd_op_eval(const RunConfig& cfg) {
  Timer timer;
  const ifl::AnalyticField field = resolve_datum(cfg);
  const ifl::Vec x = resolve_probe(cfg);

  ifl::OperatorConfig op;
  op.s = cfg.s;
  op.dirs = ifl::DirectionSet::uniform(cfg.dim, cfg.n_dir);
  op.quad.eps = cfg.eps;
  op.quad.panels_per_decade = cfg.panels_per_decade;
  op.quad.nodes_per_panel = cfg.nodes_per_panel;
  op.grad_tol = cfg.grad_tol;
  // The cut only needs to clear the field's structure: past
  // constant_beyond() + |probe| every ray sits in the closed-form tail.
  if (auto cb = field.constant_beyond())
    op.quad.cut = std::max(10.0, *cb + ifl::norm(x, cfg.dim) + 1.0);

  const ifl::OperatorEval ev = ifl::evaluate_operator(field, x, op);

  std::printf("datum %s (dim %d), probe (", cfg.datum.c_str(), cfg.dim);
  for (int a = 0; a < cfg.dim; ++a)
    std::printf("%s%.6g", a ? ", " : "", x[a]);
  std::printf("), s = %.4g, eps = %.4g\n", cfg.s, cfg.eps);
  std::printf("  truncated operator   % .12e\n", ev.l_eps);
  std::printf("  limit operator       % .12e\n", ev.value);
  std::printf("  upper branch         % .12e\n", ev.plus);
  std::printf("  lower branch         % .12e\n", ev.minus);
  std::printf("  critical point       %s\n", ev.zero_gradient ? "yes" : "no");
  std::printf("  quadrature cut       %.6g\n", op.quad.cut);

  nlohmann::json j;
  j["command"] = "op-eval";
  j["config"] = config_json(cfg);
  j["probe"] = std::vector<double>(x.begin(), x.begin() + cfg.dim);
  j["outputs"] = {{"l_eps", ev.l_eps},
                  {"value", ev.value},
                  {"plus", ev.plus},
                  {"minus", ev.minus},
                  {"zero_gradient", ev.zero_gradient},
                  {"cut", op.quad.cut}};
  j["wall_seconds"] = timer.elapsed();
  ifl::ensure_directory(cfg.out_dir);
  write_json(cfg.out_dir + "/op_eval.json", j);
  return 0;
}

int cmd_evolve(const RunConfig& cfg) {
  Timer timer;
  const ifl::AnalyticField field = resolve_datum(cfg);
  const double far = field.far_value().value_or(0.0);
  const ifl::GridSpec grid =
      ifl::GridSpec::square(cfg.dim, cfg.half_width, cfg.nodes);
  ifl::SampledField u0 = ifl::SampledField::sample(
      grid, field, ifl::ExtensionPolicy::constant_far_field(far));

  ifl::SchemeConfig sc;
  sc.s = cfg.s;
  sc.eps = cfg.eps;
  sc.theta = cfg.theta;
  sc.T = cfg.horizon;
  sc.n_dir = cfg.n_dir;
  sc.threads = cfg.threads;
  sc.kernel = *ifl::kernel_from_name(cfg.kernel);
  sc.snapshot_times = cfg.snapshot_times;
  sc.sweep.panels_per_decade = cfg.panels_per_decade;
  sc.sweep.nodes_per_panel = cfg.nodes_per_panel;

  const ifl::EvolveResult r = ifl::evolve(u0, sc);

  ifl::ensure_directory(cfg.out_dir);
  char name[64];
  for (std::size_t i = 0; i < r.snapshots.size(); ++i) {
    std::snprintf(name, sizeof name, "/u_t%.4f.csv", r.snapshot_times[i]);
    ifl::write_field_csv(cfg.out_dir + name, r.snapshots[i]);
  }
  ifl::write_field_csv(cfg.out_dir + "/u_final.csv", r.final);

  std::string mon = "step,t,tau,min,max,mass,boundary_drift,step_change\n";
  for (const ifl::StepMonitor& m : r.monitors) {
    mon += std::to_string(m.step) + ',' + ifl::format_double(m.t) + ',' +
           ifl::format_double(m.tau) + ',' + ifl::format_double(m.min_value) +
           ',' + ifl::format_double(m.max_value) + ',' +
           ifl::format_double(m.mass) + ',' +
           ifl::format_double(m.boundary_drift) + ',' +
           ifl::format_double(m.step_change) + '\n';
  }
  ifl::write_text(cfg.out_dir + "/monitors.csv", mon);

  double vmin = 1e300, vmax = -1e300;
  for (double v : r.final.values()) {
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }

  nlohmann::json j;
  j["command"] = "evolve";
  j["config"] = config_json(cfg);
  j["outputs"] = {{"tau", r.tau},
                  {"steps", r.steps},
                  {"kernel_used", ifl::kernel_name(r.kernel_used)},
                  {"final_min", vmin},
                  {"final_max", vmax},
                  {"snapshots", r.snapshot_times},
                  {"far_value", far}};
  j["wall_seconds"] = timer.elapsed();
  write_json(cfg.out_dir + "/run.json", j);

  std::printf(
      "evolved %s datum on %d^%d grid to T=%g: %d steps of tau=%.6g (%s "
      "kernel), final range [%.6g, %.6g], %.2f s\n",
      cfg.datum.c_str(), cfg.nodes, cfg.dim, cfg.horizon, r.steps, r.tau,
      ifl::kernel_name(r.kernel_used), vmin, vmax, timer.elapsed());
  std::printf("wrote %s/u_final.csv and %zu snapshot file(s)\n",
              cfg.out_dir.c_str(), r.snapshots.size());
  return 0;
}

int cmd_kernel(const RunConfig& cfg) {
  Timer timer;
  const ifl::Kernel1D k = ifl::Kernel1D::build(cfg.s);

  // Sanity monitors: unit mass and strict radial decrease of the profile.
  const double mass_err = std::abs(k.mass() - 1.0);
  double worst_increase = -1e300;
  const std::vector<double>& tab = k.table();
  for (std::size_t i = 0; i + 1 < tab.size(); ++i)
    worst_increase = std::max(worst_increase, tab[i + 1] - tab[i]);
  const bool decreasing = worst_increase < 0.0;

  ifl::ensure_directory(cfg.out_dir);
  char name[64];
  std::snprintf(name, sizeof name, "/kernel_s%.4g.csv", cfg.s);
  ifl::write_kernel_csv(cfg.out_dir + name, k);

  nlohmann::json j;
  j["command"] = "kernel";
  j["config"] = config_json(cfg);
  j["outputs"] = {{"mass", k.mass()},
                  {"mass_error", mass_err},
                  {"strictly_decreasing", decreasing},
                  {"worst_increase", worst_increase},
                  {"r_max", k.r_max()},
                  {"dr", k.dr()},
                  {"tail_constant", k.tail_constant()}};
  j["wall_seconds"] = timer.elapsed();
  write_json(cfg.out_dir + "/kernel.json", j);

  std::printf(
      "kernel profile at s=%.4g: mass error %.3e, strictly decreasing: %s, "
      "wrote %s%s\n",
      cfg.s, mass_err, decreasing ? "yes" : "no", cfg.out_dir.c_str(), name);
  return (mass_err <= 1e-6 && decreasing) ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, bool quick) {
  Timer timer;
  ifl::VerifyOptions opt;
  opt.seed = cfg.seed;
  opt.threads = cfg.threads;
  opt.out_dir = cfg.out_dir;
  opt.quick = quick;
  ifl::ensure_directory(cfg.out_dir);

  std::vector<std::string> suites;
  if (cfg.suite == "all")
    suites = ifl::suite_names();
  else
    suites.push_back(cfg.suite);

  bool all_ok = true;
  nlohmann::json summary;
  summary["command"] = "verify";
  summary["config"] = config_json(cfg);
  summary["quick"] = quick;
  summary["suites"] = nlohmann::json::array();
  for (const std::string& name : suites) {
    const ifl::VerificationReport rep = ifl::run_suite(name, opt);
    rep.print(std::cout);
    write_json(cfg.out_dir + "/verify_" + name + ".json",
               nlohmann::json::parse(rep.to_json_string()));
    summary["suites"].push_back(
        {{"suite", name}, {"all_pass", rep.all_pass()},
         {"failures", rep.failures()}, {"wall_seconds", rep.wall_seconds}});
    all_ok = all_ok && rep.all_pass();
  }
  summary["all_pass"] = all_ok;
  summary["wall_seconds"] = timer.elapsed();
  write_json(cfg.out_dir + "/verify_summary.json", summary);

  std::printf("verification %s in %.1f s (reports in %s)\n",
              all_ok ? "PASSED" : "FAILED", timer.elapsed(),
              cfg.out_dir.c_str());
  return all_ok ? 0 : 1;
}

int cmd_harnack(const RunConfig& cfg) {
  Timer timer;
  ifl::VerifyOptions opt;
  opt.seed = cfg.seed;
  opt.threads = cfg.threads;
  opt.out_dir = cfg.out_dir;
  opt.quick = cfg.nodes <= 64;
  const ifl::VerificationReport rep = ifl::run_suite("harnack", opt);
  rep.print(std::cout);
  ifl::ensure_directory(cfg.out_dir);
  write_json(cfg.out_dir + "/harnack.json",
             nlohmann::json::parse(rep.to_json_string()));
  std::printf("harnack comparison %s in %.1f s\n",
              rep.all_pass() ? "PASSED" : "FAILED", timer.elapsed());
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Monotone solver and verification harness for the fractional "
      "infinity-Laplacian evolution"};
  app.require_subcommand(1);

  std::list<SubContext> contexts;
  auto make_sub = [&](const std::string& name, const std::string& desc) {
    contexts.emplace_back();
    SubContext& c = contexts.back();
    c.app = app.add_subcommand(name, desc);
    add_common_flags(c);
    return &c;
  };

  int code = 0;
  SubContext* op = make_sub(
      "op-eval", "evaluate the nonlocal operator on a catalog field");
  op->app->callback([&code, op] { code = cmd_op_eval(op->resolve()); });

  SubContext* ev = make_sub(
      "evolve", "march the explicit scheme and write snapshots");
  ev->app->callback([&code, ev] { code = cmd_evolve(ev->resolve()); });

  SubContext* ke = make_sub(
      "kernel", "tabulate the 1D self-similar kernel profile");
  ke->app->callback([&code, ke] { code = cmd_kernel(ke->resolve()); });

  SubContext* ve = make_sub(
      "verify", "run property suites and report pass/fail checks");
  ve->app->add_flag("--quick", ve->quick,
                    "reduced resolutions for fast runs");
  ve->app->callback(
      [&code, ve] { code = cmd_verify(ve->resolve(), ve->quick); });

  SubContext* ha = make_sub(
      "harnack", "kernel-comparison bands for an evolved compact bump");
  ha->app->callback([&code, ha] { code = cmd_harnack(ha->resolve()); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const ifl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ifl::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return code;
}
