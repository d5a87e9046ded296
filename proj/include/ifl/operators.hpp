#pragma once

#include <optional>

#include "ifl/directions.hpp"
#include "ifl/field.hpp"
#include "ifl/quadrature.hpp"

namespace ifl {

// Normalizing constant of the one-dimensional fractional Laplacian restricted
// to a line: 4^s s Gamma(1/2 + s) / (sqrt(pi) Gamma(1 - s)).
double cs_constant(double s);

// c(s) in the uniform bound |value| <= c(s) * G^(2-2s) * H^(2s-1) for fields
// with gradient bound G and Hessian bound H (optimized over the split radius).
double uniform_bound_constant(double s);

// Gradient handling at the probe: measure by finite differences, or force a
// branch when the caller knows the critical-point structure exactly.
enum class GradMode { kMeasure, kForceNonzero, kForceZero };

struct OperatorConfig {
  double s = 0.75;
  DirectionSet dirs = DirectionSet::uniform(2, 64);
  QuadRule quad;         // quad.eps is the epsilon of the truncated operator
  double grad_tol = 1e-8;
  double fd_h = 1e-5;
  GradMode grad = GradMode::kMeasure;
  std::optional<Vec> grad_hint;  // replaces the finite-difference measurement
};

// The monotone operator family evaluated at one probe, all from one pass of
// shared ray/pair tables so the structural ordering minus <= value <= plus
// holds to rounding by construction.
struct OperatorEval {
  double l_eps = 0.0;      // epsilon-truncated max/min ray form
  double value = 0.0;      // limit operator (pair form along the gradient,
                           // or split one-sided form at critical points)
  double plus = 0.0;       // max over directions of the pair integral
  double minus = 0.0;      // min over directions of the pair integral
  bool zero_gradient = false;
  Vec grad{0.0, 0.0, 0.0};
  Vec arg_sup{0.0, 0.0, 0.0};  // maximizing ray direction of l_eps
  Vec arg_inf{0.0, 0.0, 0.0};  // minimizing ray direction of l_eps
};

OperatorEval evaluate_operator(const ScalarField& f, const Vec& x,
                               const OperatorConfig& cfg);

// Convenience wrappers over evaluate_operator.
double l_eps(const ScalarField& f, const Vec& x, const OperatorConfig& cfg);
double ifl(const ScalarField& f, const Vec& x, const OperatorConfig& cfg);
double ifl_plus(const ScalarField& f, const Vec& x, const OperatorConfig& cfg);
double ifl_minus(const ScalarField& f, const Vec& x, const OperatorConfig& cfg);

// One-dimensional fractional Laplacian of a profile at abscissa r:
// cs_constant(s) times the two-sided pair integral.
double frac_lap_1d(const ScalarField& profile, double r, double s,
                   const QuadRule& rule);

}  // namespace ifl
