#include "ifl/run_config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ifl/catalog.hpp"
#include "ifl/sweep.hpp"
#include "ifl/verify.hpp"

namespace ifl {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail_at(const std::string& path, int line, const std::string& msg) {
  throw ConfigError(path + ":" + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& path, int line, const std::string& key,
                    const std::string& v) {
  try {
    std::size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return d;
  } catch (const std::exception&) {
    fail_at(path, line, "key '" + key + "': cannot parse '" + v + "' as a number");
  }
}

long long parse_int(const std::string& path, int line, const std::string& key,
                    const std::string& v) {
  try {
    std::size_t pos = 0;
    long long i = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return i;
  } catch (const std::exception&) {
    fail_at(path, line, "key '" + key + "': cannot parse '" + v + "' as an integer");
  }
}

std::vector<double> parse_list(const std::string& path, int line,
                               const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) fail_at(path, line, "key '" + key + "': empty list entry");
    out.push_back(parse_double(path, line, key, item));
  }
  return out;
}

}  // namespace

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw ConfigError(path + ": cannot open config file");
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    std::size_t cpos = std::min(s.find('#'), s.find(';'));
    if (cpos != std::string::npos) s = s.substr(0, cpos);
    s = trim(s);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail_at(path, line, "unterminated section header");
      continue;  // sections are decorative; the key namespace is flat
    }
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) fail_at(path, line, "expected 'key = value'");
    std::string key = trim(s.substr(0, eq));
    std::string val = trim(s.substr(eq + 1));
    if (key.empty()) fail_at(path, line, "missing key before '='");
    if (val.empty()) fail_at(path, line, "key '" + key + "': missing value");

    if (key == "s") cfg.s = parse_double(path, line, key, val);
    else if (key == "dim") cfg.dim = static_cast<int>(parse_int(path, line, key, val));
    else if (key == "datum") cfg.datum = val;
    else if (key == "datum-param") cfg.datum_param = parse_double(path, line, key, val);
    else if (key == "half-width") cfg.half_width = parse_double(path, line, key, val);
    else if (key == "nodes") cfg.nodes = static_cast<int>(parse_int(path, line, key, val));
    else if (key == "eps") cfg.eps = parse_double(path, line, key, val);
    else if (key == "n-dir") cfg.n_dir = static_cast<int>(parse_int(path, line, key, val));
    else if (key == "panels-per-decade")
      cfg.panels_per_decade = static_cast<int>(parse_int(path, line, key, val));
    else if (key == "nodes-per-panel")
      cfg.nodes_per_panel = static_cast<int>(parse_int(path, line, key, val));
    else if (key == "grad-tol") cfg.grad_tol = parse_double(path, line, key, val);
    else if (key == "theta") cfg.theta = parse_double(path, line, key, val);
    else if (key == "T") cfg.horizon = parse_double(path, line, key, val);
    else if (key == "snapshot-times") cfg.snapshot_times = parse_list(path, line, key, val);
    else if (key == "out") cfg.out_dir = val;
    else if (key == "kernel") cfg.kernel = val;
    else if (key == "threads") cfg.threads = static_cast<int>(parse_int(path, line, key, val));
    else if (key == "seed")
      cfg.seed = static_cast<std::uint64_t>(parse_int(path, line, key, val));
    else if (key == "suite") cfg.suite = val;
    else if (key == "probe") cfg.probe = parse_list(path, line, key, val);
    else fail_at(path, line, "unknown key '" + key + "'");
  }
}

void validate_config(const RunConfig& cfg) {
  if (!(cfg.s > 0.5 && cfg.s < 1.0))
    throw ConfigError("s must lie in (1/2,1); got s = " + std::to_string(cfg.s));
  if (cfg.dim < 1 || cfg.dim > 3)
    throw ConfigError("dim must be 1, 2, or 3; got " + std::to_string(cfg.dim));
  if (!(cfg.eps > 0.0)) throw ConfigError("eps must be positive");
  if (!(cfg.theta > 0.0 && cfg.theta <= 1.0))
    throw ConfigError("theta must lie in (0,1]: theta > 1 violates the stability "
                      "step bound; got theta = " + std::to_string(cfg.theta));
  if (!(cfg.horizon >= 0.0)) throw ConfigError("T must be nonnegative");
  if (!(cfg.half_width > 0.0)) throw ConfigError("half-width must be positive");
  if (cfg.nodes < 2) throw ConfigError("nodes must be at least 2 per axis");
  if (cfg.n_dir < 2) throw ConfigError("n-dir must be at least 2");
  if (cfg.panels_per_decade < 1) throw ConfigError("panels-per-decade must be >= 1");
  if (cfg.nodes_per_panel < 2 || cfg.nodes_per_panel > 32)
    throw ConfigError("nodes-per-panel must lie in [2, 32]");
  if (!(cfg.grad_tol > 0.0)) throw ConfigError("grad-tol must be positive");
  if (cfg.threads < 1) throw ConfigError("threads must be >= 1");

  auto names = catalog_names();
  if (std::find(names.begin(), names.end(), cfg.datum) == names.end()) {
    std::string all;
    for (const auto& n : names) all += (all.empty() ? "" : ", ") + n;
    throw ConfigError("unknown datum '" + cfg.datum + "' (known: " + all + ")");
  }
  if (!kernel_from_name(cfg.kernel))
    throw ConfigError("unknown kernel '" + cfg.kernel +
                      "' (known: auto, reference, scalar, avx2, neon)");
  if (cfg.suite != "all") {
    auto suites = suite_names();
    if (std::find(suites.begin(), suites.end(), cfg.suite) == suites.end()) {
      std::string all;
      for (const auto& n : suites) all += (all.empty() ? "" : ", ") + n;
      throw ConfigError("unknown suite '" + cfg.suite + "' (known: all, " + all + ")");
    }
  }
  for (double t : cfg.snapshot_times)
    if (t < 0.0 || t > cfg.horizon)
      throw ConfigError("snapshot time " + std::to_string(t) +
                        " outside [0, T] with T = " + std::to_string(cfg.horizon));
  if (!cfg.probe.empty() && static_cast<int>(cfg.probe.size()) != cfg.dim)
    throw ConfigError("probe must list exactly dim coordinates");
}

}  // namespace ifl
