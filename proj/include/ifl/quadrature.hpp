#pragma once

#include <limits>
#include <vector>

#include "ifl/field.hpp"
#include "ifl/math_util.hpp"

namespace ifl {

// How the ray integral beyond cut is treated.
enum class TailMode {
  // Field equals its far-field constant c beyond cut; the tail integrates in
  // closed form to (c - phi(x)) * cut^(-2s) / (2s). Requires far_value().
  kAnalyticConstantTail,
  // Truncate at cut (the tail contribution is dropped).
  kZeroTail,
};

// Parameters of the one-dimensional radial quadrature on [eps, cut] plus tail.
// Panels are geometric with ratio 10^(1/panels_per_decade); edges additionally
// snap to declared jump-sphere crossings along the ray, and panels wider than
// max_panel_width (when positive) are subdivided uniformly.
struct QuadRule {
  double eps = 0.1;
  double cut = 10.0;
  int panels_per_decade = 16;
  int nodes_per_panel = 8;
  TailMode tail = TailMode::kAnalyticConstantTail;
  double max_panel_width = 0.0;  // 0: no cap

  // When true (and the tail is analytic-constant), node weights are scaled by
  // a factor ~1 so the rule integrates eta^(-1-2s) over [eps, infinity)
  // exactly; the scheme depends on this for its exact constant-field identity.
  bool renormalize = true;

  // Pair/one-sided split radius delta and floor for the graded near panels;
  // zero means choose automatically from the geometry.
  double delta = 0.0;
  double eta_min = 0.0;
};

struct GaussLegendre {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;  // sum = 2
};

// Nodes and weights of the n-point Gauss-Legendre rule (Newton on P_n).
const GaussLegendre& gauss_legendre(int n);

// Weight of the closed-form constant tail: integral of eta^(-1-2s) over
// [cut, infinity) = cut^(-2s) / (2s).
double tail_weight(double cut, double s);

// Panel edges on [lo, hi]: geometric from lo at ratio 10^(1/ppd), snapped to
// the given breakpoints (interior ones only, deduplicated), then capped.
std::vector<double> build_panels(double lo, double hi, int panels_per_decade,
                                 const std::vector<double>& breakpoints,
                                 double max_panel_width);

// Crossing distances eta > lo_exclusive at which |x + eta y| equals one of
// the given sphere radii (|y| = 1).
std::vector<double> ray_breakpoints(const Vec& x, const Vec& y, int dim,
                                    const std::vector<double>& radii,
                                    double lo_exclusive, double hi);

struct RayIntegral {
  double value = 0.0;       // integral of (phi(x + eta y) - phi(x)) eta^(-1-2s)
  double weight_sum = 0.0;  // total measure applied to phi (tail included)
  bool renormalized = false;
};

// One-sided ray integral from eps to infinity along unit direction y.
RayIntegral integrate_ray(const ScalarField& f, const Vec& x, const Vec& y,
                          double s, const QuadRule& rule);

struct PairIntegral {
  double value = 0.0;
  double delta = 0.0;       // split radius actually used
  double curvature = 0.0;   // measured second difference coefficient at 0
};

// Two-sided integral over (0, infinity) of
//   (phi(x + eta y) + phi(x - eta y) - 2 phi(x)) * eta^(-1-2s),
// with the integrable singularity at 0 handled by subtracting the measured
// quadratic term and integrating it in closed form.
PairIntegral integrate_pair(const ScalarField& f, const Vec& x, const Vec& y,
                            double s, const QuadRule& rule);

// One-sided integral over (0, infinity) of (phi(x + eta y) - phi(x)) eta^(-1-2s)
// at a critical point of phi: the measured linear term is treated as noise
// (projected out), the quadratic term is integrated in closed form.
PairIntegral integrate_one_sided(const ScalarField& f, const Vec& x, const Vec& y,
                                 double s, const QuadRule& rule);

}  // namespace ifl
