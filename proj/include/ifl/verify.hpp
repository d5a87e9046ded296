#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ifl {

// One verified statement: a measured quantity against a bound with slack.
// `anchor` is a stable machine-readable tag (kebab-case) naming the property;
// `description` is the human-readable statement.
struct CheckRecord {
  std::string anchor;
  std::string description;
  double measured = 0.0;
  double bound = 0.0;
  double tolerance = 0.0;
  // "<=" measured must not exceed bound + tolerance;
  // ">=" measured must reach bound - tolerance.
  std::string relation = "<=";
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  std::vector<CheckRecord> checks;

  CheckRecord& add_upper(const std::string& anchor,
                         const std::string& description, double measured,
                         double bound, double tolerance = 0.0);
  CheckRecord& add_lower(const std::string& anchor,
                         const std::string& description, double measured,
                         double bound, double tolerance = 0.0);
  // measured must land in [lo, hi].
  void add_band(const std::string& anchor, const std::string& description,
                double measured, double lo, double hi);

  bool all_pass() const;
  int failures() const;
  void print(std::ostream& os) const;
  std::string to_json_string() const;
};

struct VerifyOptions {
  std::uint64_t seed = 20260818;
  int threads = 1;
  // When nonempty, suites that produce data sets (convergence ladder,
  // snapshots, kernel profile) write CSV files under this directory.
  std::string out_dir;
  // Reduced grids and shorter ladders for fast unit-test runs. The asserted
  // properties are identical; only resolutions shrink.
  bool quick = false;
};

// Property suites. Each returns a filled report; nothing throws on a failed
// check (failures are recorded), only on misuse or numerical breakdown.
VerificationReport suite_operator_laws(const VerifyOptions& opt);
VerificationReport suite_scheme_props(const VerifyOptions& opt);
VerificationReport suite_convergence(const VerifyOptions& opt);
VerificationReport suite_harnack(const VerifyOptions& opt);
VerificationReport suite_counterexamples(const VerifyOptions& opt);

// Names accepted by run_suite, in recommended execution order.
std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace ifl
