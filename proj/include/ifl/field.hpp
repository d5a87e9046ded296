#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ifl/grid.hpp"
#include "ifl/math_util.hpp"

namespace ifl {

// How a grid-sampled field is defined outside its box.
enum class Extension {
  kConstantFarField,            // a fixed constant everywhere outside the box
  kClampToNearestBoundaryValue, // evaluate at the box projection of x
  kAnalyticTail,                // user-supplied callable outside the box
};

struct ExtensionPolicy {
  Extension mode = Extension::kConstantFarField;
  double constant = 0.0;
  std::function<double(const Vec&)> tail;  // used only for kAnalyticTail

  static ExtensionPolicy constant_far_field(double c) {
    ExtensionPolicy p;
    p.mode = Extension::kConstantFarField;
    p.constant = c;
    return p;
  }
  static ExtensionPolicy clamp() {
    ExtensionPolicy p;
    p.mode = Extension::kClampToNearestBoundaryValue;
    return p;
  }
  static ExtensionPolicy analytic_tail(std::function<double(const Vec&)> f) {
    ExtensionPolicy p;
    p.mode = Extension::kAnalyticTail;
    p.tail = std::move(f);
    return p;
  }
};

// A real-valued function of up to three variables, with optional structural
// metadata that quadrature uses to split panels at jumps and to integrate
// constant far fields in closed form.
class ScalarField {
 public:
  virtual ~ScalarField() = default;
  virtual int dim() const = 0;
  virtual double eval(const Vec& x) const = 0;

  // Limit value at infinity, when the field has one (uniform over directions).
  virtual std::optional<double> far_value() const { return std::nullopt; }

  // Radius R such that the field equals far_value() exactly on |x| >= R.
  virtual std::optional<double> constant_beyond() const { return std::nullopt; }

  // Radii of origin-centered spheres across which the field jumps; ray
  // quadrature snaps panel edges to the crossings of these spheres.
  virtual std::vector<double> jump_radii() const { return {}; }

  // Limit of eval(x + eta*y) as eta -> infinity for a specific ray. Defaults
  // to the uniform far value; fields whose limit depends on the direction
  // (monotone single-variable profiles) override this so the closed-form
  // quadrature tail stays exact per ray.
  virtual std::optional<double> ray_far_value(const Vec& x, const Vec& y) const {
    (void)x;
    (void)y;
    return far_value();
  }
};

class AnalyticField final : public ScalarField {
 public:
  AnalyticField(int dim, std::function<double(const Vec&)> f)
      : dim_(dim), f_(std::move(f)) {}

  int dim() const override { return dim_; }
  double eval(const Vec& x) const override { return f_(x); }
  std::optional<double> far_value() const override { return far_value_; }
  std::optional<double> constant_beyond() const override { return constant_beyond_; }
  std::vector<double> jump_radii() const override { return jump_radii_; }
  std::optional<double> ray_far_value(const Vec& x, const Vec& y) const override {
    if (ray_far_) return ray_far_(x, y);
    return far_value_;
  }

  AnalyticField& with_far_value(double c) {
    far_value_ = c;
    return *this;
  }
  AnalyticField& with_constant_beyond(double r) {
    constant_beyond_ = r;
    return *this;
  }
  AnalyticField& with_jump_radii(std::vector<double> r) {
    jump_radii_ = std::move(r);
    return *this;
  }
  AnalyticField& with_ray_far_value(std::function<double(const Vec&, const Vec&)> f) {
    ray_far_ = std::move(f);
    return *this;
  }

 private:
  int dim_;
  std::function<double(const Vec&)> f_;
  std::optional<double> far_value_;
  std::optional<double> constant_beyond_;
  std::vector<double> jump_radii_;
  std::function<double(const Vec&, const Vec&)> ray_far_;
};

// Grid samples with multilinear interpolation inside the box and an
// ExtensionPolicy outside it. Interpolation weights are convex, so nodewise
// ordering of two fields is preserved pointwise.
class SampledField final : public ScalarField {
 public:
  SampledField(GridSpec grid, ExtensionPolicy policy)
      : grid_(grid), policy_(std::move(policy)),
        values_(grid.num_nodes(), 0.0) {}

  SampledField(GridSpec grid, ExtensionPolicy policy, std::vector<double> values)
      : grid_(grid), policy_(std::move(policy)), values_(std::move(values)) {
    require(values_.size() == grid_.num_nodes(),
            "SampledField: value count does not match grid");
  }

  static SampledField sample(const GridSpec& grid, const ScalarField& f,
                             ExtensionPolicy policy) {
    SampledField s(grid, std::move(policy));
    std::size_t m = grid.num_nodes();
    for (std::size_t k = 0; k < m; ++k) s.values_[k] = f.eval(grid.point(grid.unravel(k)));
    return s;
  }

  int dim() const override { return grid_.dim; }

  const GridSpec& grid() const { return grid_; }
  const ExtensionPolicy& policy() const { return policy_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  double eval(const Vec& x) const override {
    if (!grid_.contains(x)) {
      switch (policy_.mode) {
        case Extension::kConstantFarField:
          return policy_.constant;
        case Extension::kClampToNearestBoundaryValue: {
          Vec xc = x;
          for (int a = 0; a < grid_.dim; ++a)
            xc[a] = std::min(std::max(xc[a], grid_.lo[a]), grid_.hi[a]);
          return interp_inside(xc);
        }
        case Extension::kAnalyticTail:
          return policy_.tail(x);
      }
    }
    return interp_inside(x);
  }

  std::optional<double> far_value() const override {
    if (policy_.mode == Extension::kConstantFarField) return policy_.constant;
    return std::nullopt;
  }

  // Outside the circumscribed ball every point is outside the box, where a
  // constant far field is exact by definition.
  std::optional<double> constant_beyond() const override {
    if (policy_.mode == Extension::kConstantFarField) return grid_.circumradius();
    return std::nullopt;
  }

 private:
  double interp_inside(const Vec& x) const {
    std::array<int, 3> c{0, 0, 0};
    std::array<double, 3> t{0.0, 0.0, 0.0};
    for (int a = 0; a < grid_.dim; ++a) {
      if (grid_.n[a] == 1) { c[a] = 0; t[a] = 0.0; continue; }
      double u = (x[a] - grid_.lo[a]) / grid_.h(a);
      int ci = static_cast<int>(u);
      if (ci > grid_.n[a] - 2) ci = grid_.n[a] - 2;
      if (ci < 0) ci = 0;
      c[a] = ci;
      t[a] = u - ci;
      // Guard rounding at the box faces so weights stay convex.
      if (t[a] < 0.0) t[a] = 0.0;
      if (t[a] > 1.0) t[a] = 1.0;
    }
    double acc = 0.0;
    int corners = 1 << grid_.dim;
    for (int m = 0; m < corners; ++m) {
      std::array<int, 3> idx = c;
      double w = 1.0;
      for (int a = 0; a < grid_.dim; ++a) {
        if (m & (1 << a)) {
          idx[a] = (grid_.n[a] == 1) ? 0 : c[a] + 1;
          w *= t[a];
        } else {
          w *= 1.0 - t[a];
        }
      }
      acc += w * values_[grid_.linear(idx)];
    }
    return acc;
  }

  GridSpec grid_;
  ExtensionPolicy policy_;
  std::vector<double> values_;
};

// Central-difference gradient estimate with step h per axis.
Vec gradient_fd(const ScalarField& f, const Vec& x, double h);

// f(. + shift), with metadata moved accordingly (jump spheres recentred at
// -shift are dropped from the origin-centered list; callers relying on jump
// snapping should translate the probe instead of the field).
std::shared_ptr<ScalarField> translate(std::shared_ptr<const ScalarField> f, Vec shift);

// Exact translation of a sampled field by a whole number of grid cells:
// node values move by reindexing, vacated nodes take the far-field constant.
SampledField translate_nodes(const SampledField& f, const std::array<int, 3>& cells);

}  // namespace ifl
