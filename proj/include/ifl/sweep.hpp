#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ifl/directions.hpp"
#include "ifl/field.hpp"
#include "ifl/grid.hpp"
#include "ifl/quadrature.hpp"

namespace ifl {

// Computational kernels for the grid sweep. All variants implement the same
// arithmetic on the same quadrature plan; selection happens at runtime.
//  - kReference: generic field/quadrature code paths, O(slow), the baseline
//    the fast kernels are equivalence-tested against.
//  - kScalar: index-space scalar kernel (portable).
//  - kAvx2 / kNeon: vectorized index-space kernels (x86-64 / aarch64).
enum class SweepKernel { kAuto, kReference, kScalar, kAvx2, kNeon };

const char* kernel_name(SweepKernel k);
std::optional<SweepKernel> kernel_from_name(const std::string& name);
bool kernel_available(SweepKernel k, int dim);
// kAuto resolves to the fastest available variant for this dimension;
// explicit requests throw when the variant is unavailable.
SweepKernel resolve_kernel(SweepKernel requested, int dim);

struct SweepOptions {
  int panels_per_decade = 16;
  int nodes_per_panel = 8;
  // Augment the direction set per node with +/- the grid-stencil gradient
  // direction whenever the gradient is reliably nonzero.
  bool augment_gradient = true;
  double grad_tol = 1e-10;
  double cut = 0.0;  // 0: twice the grid circumradius (tail exact for any node)
  // Near-field fold: quadrature samples closer to the node than this many
  // grid cells are replaced by a single sample at the first panel edge past
  // the cap, carrying the mass of the local quadratic model
  //   integral over [eps, floor] of (eta/floor)^2 eta^(-1-2s) deta.
  // Multilinear interpolation cannot resolve sub-cell sample offsets, and the
  // eta^(-1-2s) measure amplifies that noise without bound as eps shrinks
  // below the spacing; the fold caps it while keeping every sample weight
  // positive, so the update stays a monotone convex combination. It is a
  // no-op whenever eps is already at least the cap. 0 disables.
  double near_cap_cells = 1.5;
};

// Precomputed quadrature plan for evaluating the truncated operator
//   (L u)(x_i) = cs * ( max_d ray_d(x_i) + min_d ray_d(x_i) ),
//   ray_d(x_i) = integral over (eps, inf) of (u(x_i + eta d) - u(x_i)) deta / eta^(1+2s)
// at every grid node of a sampled field with a constant far-field value.
//
// All per-point interpolation data is precomputed in index space (integer
// cell offset + fractional position), so the coefficients are identical for
// every node: translating the node values by whole cells translates the
// result bit-for-bit, and constant fields map to exactly zero.
class Sweep {
 public:
  Sweep(const GridSpec& g, const DirectionSet& dirs, double s, double eps,
        SweepOptions opt = {});

  // out[i] = cs * (max_d ray_d(i) + min_d ray_d(i)); u holds node values of a
  // field equal to far_c outside the grid box.
  void apply(const std::vector<double>& u, double far_c, std::vector<double>& out,
             SweepKernel kernel = SweepKernel::kAuto, int threads = 1) const;

  double total_mass() const { return total_mass_; }  // eps^(-2s)/(2s), nominal
  double tail_weight_value() const { return tail_w_; }
  double cut_radius() const { return cut_; }
  // Radius of the first kept sample; equals eps when the near-field fold is
  // inactive, else the panel edge the fold evaluates at.
  double near_floor() const { return near_floor_; }
  // Mass carried by the folded near-field sample (0 when inactive).
  double near_weight() const { return near_w_; }
  // Actual mass applied per ray: sum of sample weights plus the tail. Equals
  // total_mass() when the fold is inactive, is strictly smaller otherwise
  // (the quadratic model carries less mass than the raw measure), so the CFL
  // step derived from the nominal mass always keeps the update monotone.
  double quadrature_mass() const;
  int num_quad_points() const { return static_cast<int>(eta_.size()); }
  const GridSpec& grid() const { return grid_; }
  const DirectionSet& directions() const { return dirs_; }
  double s_value() const { return s_; }
  double eps_value() const { return eps_; }
  const SweepOptions& options() const { return opt_; }

 private:
  struct DirPlan {
    // Per quadrature point: integer cell offset per axis and fractional
    // position inside the cell, both node-independent.
    std::vector<std::int32_t> qx, qy, qz;
    std::vector<double> fx, fy, fz;
  };

  void apply_reference(const std::vector<double>& u, double far_c,
                       std::vector<double>& out, int threads) const;
  void apply_indexed(const std::vector<double>& u, double far_c,
                     std::vector<double>& out, SweepKernel kernel,
                     int threads) const;

  GridSpec grid_;
  DirectionSet dirs_;
  SweepOptions opt_;
  double s_ = 0.75;
  double eps_ = 0.1;
  double cut_ = 0.0;
  double cs_ = 0.0;
  double total_mass_ = 0.0;
  double tail_w_ = 0.0;
  double near_floor_ = 0.0;
  double near_w_ = 0.0;
  std::vector<double> eta_;  // quadrature radii (shared by all directions)
  std::vector<double> w_;    // positive weights; see quadrature_mass()
  std::vector<DirPlan> plans_;
};

// Gradient of node values by the grid stencil (central differences inside,
// one-sided at the faces); shared by the sweep kernels and their reference.
Vec node_gradient(const GridSpec& g, const std::vector<double>& u,
                  const std::array<int, 3>& idx);

}  // namespace ifl
