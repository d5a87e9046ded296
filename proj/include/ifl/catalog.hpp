#pragma once

#include <string>
#include <vector>

#include "ifl/field.hpp"
#include "ifl/radial.hpp"

namespace ifl {

// Named initial data shared by the CLI, the verification suites, and the
// acceptance problems. Radial entries are also exposed as profiles so the 1D
// oracle can evolve the same datum.

// exp(-(r/w)^2); numerically constant 0 beyond ~6.5 w
RadialProfile gaussian_profile(double w = 1.0);

// exp(1 - r0^2/(r0^2 - r^2)) inside r < r0, 0 outside; smooth and compact
RadialProfile mollifier_profile(double r0 = 2.0);

// indicator of r_in <= r <= r_out
RadialProfile annulus_profile(double r_in = 9.0, double r_out = 11.0);

// (1 - r^beta)_+ : Holder continuous of exponent beta at the origin
RadialProfile cusp_profile(double beta = 0.5);

// r^2 inside the unit ball, blended C^2 down to 0 at radius 2 by a quintic
RadialProfile cap_profile();
double cap_hessian_sup();  // max |second derivative| of the cap profile

// Field catalog by name:
//   constant, gaussian, mollifier, annulus, tilted-bump, cusp, cap,
//   tanh-x1 (monotone profile of x_1), even-x1 (exp(-x_1^2)).
// `param` refines the entry where meaningful (constant level, gaussian and
// cusp shape parameters); 0 selects the default.
AnalyticField catalog_field(const std::string& name, int dim, double param = 0.0);
std::vector<std::string> catalog_names();

}  // namespace ifl
