#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstddef>

#include "ifl/math_util.hpp"

namespace ifl {

// Uniform node-centered grid on an axis-aligned box: nodes at
// lo[a] + i*h[a], i = 0..n[a]-1, with both box faces carrying nodes.
struct GridSpec {
  int dim = 2;
  std::array<double, 3> lo{0.0, 0.0, 0.0};
  std::array<double, 3> hi{1.0, 1.0, 1.0};
  std::array<int, 3> n{2, 2, 2};

  static GridSpec square(int dim, double half_width, int nodes_per_axis) {
    GridSpec g;
    g.dim = dim;
    for (int a = 0; a < 3; ++a) {
      g.lo[a] = a < dim ? -half_width : 0.0;
      g.hi[a] = a < dim ? half_width : 0.0;
      g.n[a] = a < dim ? nodes_per_axis : 1;
    }
    return g;
  }

  double h(int axis) const {
    return n[axis] > 1 ? (hi[axis] - lo[axis]) / (n[axis] - 1) : 0.0;
  }

  std::size_t num_nodes() const {
    std::size_t m = 1;
    for (int a = 0; a < dim; ++a) m *= static_cast<std::size_t>(n[a]);
    return m;
  }

  // Row-major with the last axis fastest.
  std::size_t linear(const std::array<int, 3>& idx) const {
    std::size_t k = 0;
    for (int a = 0; a < dim; ++a) k = k * n[a] + idx[a];
    return k;
  }

  std::array<int, 3> unravel(std::size_t k) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int a = dim - 1; a >= 0; --a) {
      idx[a] = static_cast<int>(k % n[a]);
      k /= n[a];
    }
    return idx;
  }

  // The last node is pinned to hi exactly so that boundary nodes always test
  // as inside the box despite rounding in lo + i*h.
  Vec point(const std::array<int, 3>& idx) const {
    Vec x{0.0, 0.0, 0.0};
    for (int a = 0; a < dim; ++a)
      x[a] = idx[a] == n[a] - 1 ? hi[a] : lo[a] + idx[a] * h(a);
    return x;
  }

  bool contains(const Vec& x) const {
    for (int a = 0; a < dim; ++a)
      if (x[a] < lo[a] || x[a] > hi[a]) return false;
    return true;
  }

  bool boundary_node(const std::array<int, 3>& idx) const {
    for (int a = 0; a < dim; ++a)
      if (idx[a] == 0 || idx[a] == n[a] - 1) return true;
    return false;
  }

  double diameter() const {
    double d2 = 0.0;
    for (int a = 0; a < dim; ++a) {
      double e = hi[a] - lo[a];
      d2 += e * e;
    }
    return std::sqrt(d2);
  }

  // Radius of the smallest origin-centered ball containing the box.
  double circumradius() const {
    double r2 = 0.0;
    for (int a = 0; a < dim; ++a) {
      double m = std::max(std::fabs(lo[a]), std::fabs(hi[a]));
      r2 += m * m;
    }
    return std::sqrt(r2);
  }

  bool same_layout(const GridSpec& o) const {
    if (dim != o.dim) return false;
    for (int a = 0; a < dim; ++a)
      if (n[a] != o.n[a] || lo[a] != o.lo[a] || hi[a] != o.hi[a]) return false;
    return true;
  }
};

}  // namespace ifl
