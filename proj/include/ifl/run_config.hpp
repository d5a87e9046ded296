#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifl {

// User-facing configuration error (bad key, bad value, failed validation).
// Messages carry "file:line:" when the problem comes from a config file.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// One flat key/value configuration shared by all CLI commands. Flags override
// file values; the JSON echo of this struct makes every run self-describing.
struct RunConfig {
  // problem
  double s = 0.75;
  int dim = 2;
  std::string datum = "gaussian";
  double datum_param = 0.0;  // 0 = datum default
  double half_width = 6.0;
  int nodes = 128;
  // operator
  double eps = 0.1;
  int n_dir = 64;
  int panels_per_decade = 16;
  int nodes_per_panel = 8;
  double grad_tol = 1e-8;
  // scheme
  double theta = 0.5;
  double horizon = 0.5;  // key "T"
  std::vector<double> snapshot_times;
  // execution and output
  std::string out_dir = "out";
  std::string kernel = "auto";
  int threads = 1;
  std::uint64_t seed = 20260818;
  std::string suite = "all";
  std::vector<double> probe;  // op-eval probe point (defaults to the origin)
};

// Keys accepted in config files (and mirrored by CLI flags):
//   s, dim, datum, datum-param, half-width, nodes, eps, n-dir,
//   panels-per-decade, nodes-per-panel, grad-tol, theta, T, snapshot-times,
//   out, kernel, threads, seed, suite, probe
// Lines are "key = value"; '#' or ';' start comments; [section] headers are
// allowed and ignored (the key namespace is flat). Unknown keys are rejected
// with their file:line location.
void apply_config_file(RunConfig& cfg, const std::string& path);

// Cross-field validation; throws ConfigError with a descriptive message.
void validate_config(const RunConfig& cfg);

}  // namespace ifl
