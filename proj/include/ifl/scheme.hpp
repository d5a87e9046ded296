#pragma once

#include <vector>

#include "ifl/field.hpp"
#include "ifl/sweep.hpp"

namespace ifl {

// Explicit march configuration for du/dt = L u with the sweep operator.
struct SchemeConfig {
  double s = 0.75;
  double eps = 0.1;
  double theta = 0.5;  // fraction of the stability-critical step
  double T = 0.5;
  int n_dir = 64;
  SweepOptions sweep;
  SweepKernel kernel = SweepKernel::kAuto;
  int threads = 1;
  std::vector<double> snapshot_times;
};

// Largest stable time step is s/cs * eps^(2s) (node coefficient of the
// update stays nonnegative); the scheme runs at theta times that.
double cfl_tau(double s, double eps, double theta);

// One explicit step: out = u + tau * L u, with l_buf receiving L u.
void scheme_step(const Sweep& sweep, const std::vector<double>& u, double far_c,
                 double tau, SweepKernel kernel, int threads,
                 std::vector<double>& l_buf, std::vector<double>& out);

struct StepMonitor {
  int step = 0;
  double t = 0.0;
  double tau = 0.0;
  double min_value = 0.0;
  double max_value = 0.0;
  double mass = 0.0;            // cell-sum integral of (u - far_c)
  double boundary_drift = 0.0;  // max |u - u0| over boundary nodes
  double step_change = 0.0;     // max |u - u_prev| over all nodes
};

struct EvolveResult {
  SampledField final;
  std::vector<SampledField> snapshots;
  std::vector<double> snapshot_times;
  std::vector<StepMonitor> monitors;
  double tau = 0.0;
  int steps = 0;
  SweepKernel kernel_used = SweepKernel::kScalar;
};

// March u0 (constant far field required) to time T. Snapshot times are served
// by linear interpolation between the bracketing steps.
EvolveResult evolve(const SampledField& u0, const SchemeConfig& cfg);

// Nodewise linear interpolation between two states at ta < tb.
SampledField interpolate_time(const SampledField& a, const SampledField& b,
                              double ta, double tb, double t);

// A-priori modulus-of-continuity shape in time for a C^(0,beta) datum with
// the given seminorm: values seminorm * dt^(beta/(2s)) for each dt. Measured
// moduli are compared against this power law (up to a constant factor).
std::vector<double> monitor_apriori(double beta, double seminorm, double s,
                                    const std::vector<double>& dts);

}  // namespace ifl
