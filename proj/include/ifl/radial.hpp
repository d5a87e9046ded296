#pragma once

#include <functional>
#include <vector>

#include "ifl/field.hpp"
#include "ifl/heat_kernel.hpp"
#include "ifl/operators.hpp"

namespace ifl {

// Profile on [0, inf); its even extension to the line is implied wherever a
// 1D view is needed. `constant_beyond = 0` means no constant tail is claimed
// (the profile may still decay to far_value numerically).
struct RadialProfile {
  std::function<double(double)> f;
  bool nonincreasing = false;
  double far_value = 0.0;
  double constant_beyond = 0.0;
  std::vector<double> jump_radii;
};

// x -> p(|x|), carrying the profile's far value, constant radius, and jump
// spheres into the field metadata.
AnalyticField lift_radial(const RadialProfile& p, int dim);

// The even extension r -> p(|r|) as a 1D field, for the 1D operator side of
// reduction checks.
AnalyticField even_extension(const RadialProfile& p);

// x -> phi(x1) with limits `lo`/`hi` at x1 -> -/+ infinity; the per-ray far
// value is lo or hi by the sign of y_1, and the (constant) on-ray value for
// tangential directions, so closed-form quadrature tails stay exact.
AnalyticField lift_profile_x1(std::function<double(double)> phi, int dim,
                              double lo, double hi);

// Exact evolution of a radial nonincreasing datum: the 1D kernel convolution
// of the even profile extension, evaluated on a radius table and lifted back
// radially with cubic interpolation. t = 0 returns the lifted datum itself.
struct ClassicalSolutionOptions {
  double window = 20.0;   // quadrature window for the convolution
  double r_table = 12.0;  // radius range of the sampled solution
  double dr = 0.01;       // radius table spacing
};
AnalyticField classical_solution(const RadialProfile& p, const Kernel1D& k,
                                 double t, int dim,
                                 const ClassicalSolutionOptions& opt = {});

// Max over probes of |n-dimensional operator of the radial lift - 1D
// operator of the even profile extension|. Probes at the origin use the
// zero-gradient branch directly (the gradient vanishes there by symmetry).
struct ReductionCheck {
  double max_abs_diff = 0.0;
  std::vector<double> radii;      // |x| per probe
  std::vector<double> lhs;        // n-dimensional operator values
  std::vector<double> rhs;        // 1D operator values
};
ReductionCheck check_reduction(const RadialProfile& p, int dim,
                               const std::vector<Vec>& probes,
                               const OperatorConfig& cfg, const QuadRule& rule_1d);

}  // namespace ifl
