#include "ifl/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "ifl/threads.hpp"
#include "ifl/operators.hpp"

#if defined(__x86_64__)
#include <immintrin.h>
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace ifl {

const char* kernel_name(SweepKernel k) {
  switch (k) {
    case SweepKernel::kAuto:      return "auto";
    case SweepKernel::kReference: return "reference";
    case SweepKernel::kScalar:    return "scalar";
    case SweepKernel::kAvx2:      return "avx2";
    case SweepKernel::kNeon:      return "neon";
  }
  return "?";
}

std::optional<SweepKernel> kernel_from_name(const std::string& name) {
  for (SweepKernel k : {SweepKernel::kAuto, SweepKernel::kReference,
                        SweepKernel::kScalar, SweepKernel::kAvx2, SweepKernel::kNeon})
    if (name == kernel_name(k)) return k;
  return std::nullopt;
}

bool kernel_available(SweepKernel k, int dim) {
  switch (k) {
    case SweepKernel::kAuto:
    case SweepKernel::kReference:
    case SweepKernel::kScalar:
      return true;
    case SweepKernel::kAvx2:
#if defined(__x86_64__)
      return dim == 2 && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case SweepKernel::kNeon:
#if defined(__aarch64__)
      return dim == 2;
#else
      (void)dim;
      return false;
#endif
  }
  return false;
}

SweepKernel resolve_kernel(SweepKernel requested, int dim) {
  if (requested == SweepKernel::kAuto) {
    if (kernel_available(SweepKernel::kAvx2, dim)) return SweepKernel::kAvx2;
    if (kernel_available(SweepKernel::kNeon, dim)) return SweepKernel::kNeon;
    return SweepKernel::kScalar;
  }
  require(kernel_available(requested, dim),
          std::string("sweep kernel not available on this host/dimension: ") +
              kernel_name(requested));
  return requested;
}

Vec node_gradient(const GridSpec& g, const std::vector<double>& u,
                  const std::array<int, 3>& idx) {
  Vec grad{0.0, 0.0, 0.0};
  for (int a = 0; a < g.dim; ++a) {
    if (g.n[a] < 2) continue;
    const double h = g.h(a);
    std::array<int, 3> ip = idx, im = idx;
    if (idx[a] == 0) {
      ip[a] = 1;
      grad[a] = (u[g.linear(ip)] - u[g.linear(idx)]) / h;
    } else if (idx[a] == g.n[a] - 1) {
      im[a] = idx[a] - 1;
      grad[a] = (u[g.linear(idx)] - u[g.linear(im)]) / h;
    } else {
      ip[a] = idx[a] + 1;
      im[a] = idx[a] - 1;
      grad[a] = (u[g.linear(ip)] - u[g.linear(im)]) / (2.0 * h);
    }
  }
  return grad;
}

Sweep::Sweep(const GridSpec& g, const DirectionSet& dirs, double s, double eps,
             SweepOptions opt)
    : grid_(g), dirs_(dirs), opt_(opt), s_(s), eps_(eps) {
  require(g.dim == dirs.dim(), "Sweep: grid/direction dimension mismatch");
  require(eps > 0.0, "Sweep: eps must be positive");
  cs_ = cs_constant(s);
  cut_ = opt.cut > 0.0 ? opt.cut : 2.0 * g.circumradius();
  require(cut_ > eps, "Sweep: cut must exceed eps");
  total_mass_ = std::pow(eps, -2.0 * s) / (2.0 * s);
  tail_w_ = tail_weight(cut_, s);

  // Shared radial quadrature: geometric panels, Gauss-Legendre nodes, weights
  // scaled so their sum plus the closed-form tail matches the exact measure
  // of eta^(-1-2s) on [floor, inf). A constant field then maps to exactly
  // zero regardless of the weights (every term is value - u_i).
  const std::vector<double> edges =
      build_panels(eps, cut_, opt.panels_per_decade, {}, 0.0);

  // Near-field fold: drop whole panels below the cap and carry their band
  // with one sample at the first kept edge, weighted by the quadratic-model
  // mass. Folding whole panels keeps the remaining Gauss-Legendre weights
  // valid for their panels.
  double hmax = 0.0;
  for (int a = 0; a < g.dim; ++a) hmax = std::max(hmax, g.h(a));
  double cap = opt.near_cap_cells > 0.0 ? opt.near_cap_cells * hmax : 0.0;
  cap = std::min(cap, 0.25 * cut_);
  std::size_t first_panel = 0;
  near_floor_ = eps_;
  near_w_ = 0.0;
  if (cap > eps_) {
    while (first_panel + 1 < edges.size() - 1 && edges[first_panel] < cap)
      ++first_panel;
    near_floor_ = edges[first_panel];
    near_w_ = (std::pow(near_floor_, 2.0 - 2.0 * s) -
               std::pow(eps_, 2.0 - 2.0 * s)) /
              ((2.0 - 2.0 * s) * near_floor_ * near_floor_);
  }

  const GaussLegendre& gl = gauss_legendre(opt.nodes_per_panel);
  for (std::size_t p = first_panel; p + 1 < edges.size(); ++p) {
    const double mid = 0.5 * (edges[p] + edges[p + 1]);
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    for (int k = 0; k < opt.nodes_per_panel; ++k) {
      const double eta = mid + half * gl.nodes[k];
      eta_.push_back(eta);
      w_.push_back(half * gl.weights[k] * std::pow(eta, -1.0 - 2.0 * s));
    }
  }
  double wsum = 0.0;
  for (double w : w_) wsum += w;
  const double rho = (tail_weight(near_floor_, s) - tail_w_) / wsum;
  require(std::fabs(rho - 1.0) < 1e-3, "Sweep: weight renormalization far from 1");
  for (double& w : w_) w *= rho;
  if (near_w_ > 0.0) {
    eta_.insert(eta_.begin(), near_floor_);
    w_.insert(w_.begin(), near_w_);
  }

  // Index-space interpolation data per direction: the offset of the sample
  // point from the base node, split into integer cell shift and fraction.
  const std::size_t K = eta_.size();
  plans_.resize(dirs.size());
  for (int d = 0; d < dirs.size(); ++d) {
    const Vec& y = dirs.at(d);
    DirPlan& dp = plans_[d];
    dp.qx.resize(K); dp.fx.resize(K);
    if (g.dim >= 2) { dp.qy.resize(K); dp.fy.resize(K); }
    if (g.dim >= 3) { dp.qz.resize(K); dp.fz.resize(K); }
    for (std::size_t k = 0; k < K; ++k) {
      const double ox = eta_[k] * y[0] / g.h(0);
      const double flx = std::floor(ox);
      dp.qx[k] = static_cast<std::int32_t>(flx);
      dp.fx[k] = ox - flx;
      if (g.dim >= 2) {
        const double oy = eta_[k] * y[1] / g.h(1);
        const double fly = std::floor(oy);
        dp.qy[k] = static_cast<std::int32_t>(fly);
        dp.fy[k] = oy - fly;
      }
      if (g.dim >= 3) {
        const double oz = eta_[k] * y[2] / g.h(2);
        const double flz = std::floor(oz);
        dp.qz[k] = static_cast<std::int32_t>(flz);
        dp.fz[k] = oz - flz;
      }
    }
  }
}

double Sweep::quadrature_mass() const {
  double m = tail_w_;
  for (double w : w_) m += w;
  return m;
}

namespace {

// ---------------------------------------------------------------------------
// Scalar index-space kernels. Each quadrature point contributes
// w_k * (value - u_i), where value is the multilinear interpolation when the
// cell is inside the grid and the far constant otherwise. Every node runs the
// full point list in the same order, so the flop schedule (and hence the
// rounding) is independent of where the ray leaves the box.
// ---------------------------------------------------------------------------

// In-range means the sample coordinate lies in the closed index box
// [0, n-1]; a point exactly on the top face reads the face row via the last
// cell with fraction 1 (matching the closed-box eval of SampledField).
inline bool axis_sample(int i, std::int32_t q, double f, int n, int* cell,
                        double* frac) {
  const int cx = i + q;
  const double ux = static_cast<double>(cx) + f;
  if (ux < 0.0 || ux > static_cast<double>(n - 1)) return false;
  const int cc = cx > n - 2 ? n - 2 : (cx < 0 ? 0 : cx);
  *cell = cc;
  *frac = f + static_cast<double>(cx - cc);
  return true;
}

double ray_planned_1d(const double* u, int nx, int ix, double ui, double c,
                      const std::int32_t* qx, const double* fx,
                      const double* w, std::size_t K) {
  double acc = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    int cx;
    double fxe;
    double v = c;
    if (axis_sample(ix, qx[k], fx[k], nx, &cx, &fxe)) {
      const double a = u[cx], b = u[cx + 1];
      v = a + fxe * (b - a);
    }
    acc += w[k] * (v - ui);
  }
  return acc;
}

double ray_planned_2d(const double* u, int nx, int ny, int ix, int iy,
                      double ui, double c, const std::int32_t* qx,
                      const std::int32_t* qy, const double* fx, const double* fy,
                      const double* w, std::size_t K) {
  double acc = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    int cx, cy;
    double fxe, fye;
    double v = c;
    if (axis_sample(ix, qx[k], fx[k], nx, &cx, &fxe) &&
        axis_sample(iy, qy[k], fy[k], ny, &cy, &fye)) {
      const double* b = u + static_cast<std::size_t>(cx) * ny + cy;
      const double v0 = b[0] + fxe * (b[ny] - b[0]);
      const double v1 = b[1] + fxe * (b[ny + 1] - b[1]);
      v = v0 + fye * (v1 - v0);
    }
    acc += w[k] * (v - ui);
  }
  return acc;
}

double ray_planned_3d(const double* u, int nx, int ny, int nz, int ix, int iy,
                      int iz, double ui, double c, const std::int32_t* qx,
                      const std::int32_t* qy, const std::int32_t* qz,
                      const double* fx, const double* fy, const double* fz,
                      const double* w, std::size_t K) {
  double acc = 0.0;
  const std::size_t sx = static_cast<std::size_t>(ny) * nz;
  for (std::size_t k = 0; k < K; ++k) {
    int cx, cy, cz;
    double fxe, fye, fze;
    double v = c;
    if (axis_sample(ix, qx[k], fx[k], nx, &cx, &fxe) &&
        axis_sample(iy, qy[k], fy[k], ny, &cy, &fye) &&
        axis_sample(iz, qz[k], fz[k], nz, &cz, &fze)) {
      const double* b = u + cx * sx + static_cast<std::size_t>(cy) * nz + cz;
      const double x00 = b[0] + fxe * (b[sx] - b[0]);
      const double x01 = b[1] + fxe * (b[sx + 1] - b[1]);
      const double x10 = b[nz] + fxe * (b[sx + nz] - b[nz]);
      const double x11 = b[nz + 1] + fxe * (b[sx + nz + 1] - b[nz + 1]);
      const double y0 = x00 + fye * (x10 - x00);
      const double y1 = x01 + fye * (x11 - x01);
      v = y0 + fze * (y1 - y0);
    }
    acc += w[k] * (v - ui);
  }
  return acc;
}

// Ray along an arbitrary unit direction (the per-node gradient line), with
// the index-space split computed on the fly. Same arithmetic as the planned
// kernels, so augmentation keeps the node-shift invariance.
double ray_bespoke(const double* u, const GridSpec& g, const std::array<int, 3>& idx,
                   double ui, double c, const Vec& y, const double* eta,
                   const double* w, std::size_t K) {
  double acc = 0.0;
  const int dim = g.dim;
  const double ih0 = 1.0 / g.h(0);
  const double ih1 = dim >= 2 ? 1.0 / g.h(1) : 0.0;
  const double ih2 = dim >= 3 ? 1.0 / g.h(2) : 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    const double ox = eta[k] * y[0] * ih0;
    const double flx = std::floor(ox);
    double v = c;
    int cx, cy, cz;
    double fxe, fye, fze;
    if (dim == 1) {
      if (axis_sample(idx[0], static_cast<std::int32_t>(flx), ox - flx, g.n[0],
                      &cx, &fxe)) {
        v = u[cx] + fxe * (u[cx + 1] - u[cx]);
      }
    } else if (dim == 2) {
      const double oy = eta[k] * y[1] * ih1;
      const double fly = std::floor(oy);
      if (axis_sample(idx[0], static_cast<std::int32_t>(flx), ox - flx, g.n[0],
                      &cx, &fxe) &&
          axis_sample(idx[1], static_cast<std::int32_t>(fly), oy - fly, g.n[1],
                      &cy, &fye)) {
        const int ny = g.n[1];
        const double* b = u + static_cast<std::size_t>(cx) * ny + cy;
        const double v0 = b[0] + fxe * (b[ny] - b[0]);
        const double v1 = b[1] + fxe * (b[ny + 1] - b[1]);
        v = v0 + fye * (v1 - v0);
      }
    } else {
      const double oy = eta[k] * y[1] * ih1;
      const double fly = std::floor(oy);
      const double oz = eta[k] * y[2] * ih2;
      const double flz = std::floor(oz);
      if (axis_sample(idx[0], static_cast<std::int32_t>(flx), ox - flx, g.n[0],
                      &cx, &fxe) &&
          axis_sample(idx[1], static_cast<std::int32_t>(fly), oy - fly, g.n[1],
                      &cy, &fye) &&
          axis_sample(idx[2], static_cast<std::int32_t>(flz), oz - flz, g.n[2],
                      &cz, &fze)) {
        const int ny = g.n[1], nz = g.n[2];
        const std::size_t sx = static_cast<std::size_t>(ny) * nz;
        const double* b = u + cx * sx + static_cast<std::size_t>(cy) * nz + cz;
        const double x00 = b[0] + fxe * (b[sx] - b[0]);
        const double x01 = b[1] + fxe * (b[sx + 1] - b[1]);
        const double x10 = b[nz] + fxe * (b[sx + nz] - b[nz]);
        const double x11 = b[nz + 1] + fxe * (b[sx + nz + 1] - b[nz + 1]);
        const double y0 = x00 + fye * (x10 - x00);
        const double y1 = x01 + fye * (x11 - x01);
        v = y0 + fze * (y1 - y0);
      }
    }
    acc += w[k] * (v - ui);
  }
  return acc;
}

#if defined(__x86_64__)

// AVX2 variant of ray_planned_2d: four quadrature points per iteration,
// gathered corners, fused lerp. Out-of-box points are blended to the far
// constant after clamping the gather index into the array.
__attribute__((target("avx2,fma"))) double ray_planned_2d_avx2(
    const double* u, int nx, int ny, int ix, int iy, double ui, double c,
    const std::int32_t* qx, const std::int32_t* qy, const double* fx,
    const double* fy, const double* w, std::size_t K) {
  const __m128i vix = _mm_set1_epi32(ix);
  const __m128i viy = _mm_set1_epi32(iy);
  const __m128i vzero = _mm_setzero_si128();
  const __m128i vxmax = _mm_set1_epi32(nx - 2);
  const __m128i vymax = _mm_set1_epi32(ny - 2);
  const __m128i vny = _mm_set1_epi32(ny);
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vui = _mm256_set1_pd(ui);
  const __m256d dzero = _mm256_setzero_pd();
  const __m256d dxmax = _mm256_set1_pd(static_cast<double>(nx - 1));
  const __m256d dymax = _mm256_set1_pd(static_cast<double>(ny - 1));
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= K; k += 4) {
    const __m128i cx = _mm_add_epi32(vix, _mm_loadu_si128(reinterpret_cast<const __m128i*>(qx + k)));
    const __m128i cy = _mm_add_epi32(viy, _mm_loadu_si128(reinterpret_cast<const __m128i*>(qy + k)));
    const __m256d vfx = _mm256_loadu_pd(fx + k);
    const __m256d vfy = _mm256_loadu_pd(fy + k);
    // Closed-box test on the sample coordinate cx + fx (in index units).
    const __m256d ux = _mm256_add_pd(_mm256_cvtepi32_pd(cx), vfx);
    const __m256d uy = _mm256_add_pd(_mm256_cvtepi32_pd(cy), vfy);
    const __m256d okd = _mm256_and_pd(
        _mm256_and_pd(_mm256_cmp_pd(ux, dzero, _CMP_GE_OQ),
                      _mm256_cmp_pd(ux, dxmax, _CMP_LE_OQ)),
        _mm256_and_pd(_mm256_cmp_pd(uy, dzero, _CMP_GE_OQ),
                      _mm256_cmp_pd(uy, dymax, _CMP_LE_OQ)));
    // Clamped cell plus adjusted fraction: a sample exactly on the top face
    // reads the last cell at fraction 1. Clamping also keeps the gathers of
    // masked-out lanes inside the array.
    const __m128i ccx = _mm_min_epi32(_mm_max_epi32(cx, vzero), vxmax);
    const __m128i ccy = _mm_min_epi32(_mm_max_epi32(cy, vzero), vymax);
    const __m256d fxe = _mm256_add_pd(
        vfx, _mm256_cvtepi32_pd(_mm_sub_epi32(cx, ccx)));
    const __m256d fye = _mm256_add_pd(
        vfy, _mm256_cvtepi32_pd(_mm_sub_epi32(cy, ccy)));
    const __m128i lin = _mm_add_epi32(_mm_mullo_epi32(ccx, vny), ccy);
    const __m256d g00 = _mm256_i32gather_pd(u, lin, 8);
    const __m256d g01 = _mm256_i32gather_pd(u + 1, lin, 8);
    const __m256d g10 = _mm256_i32gather_pd(u + ny, lin, 8);
    const __m256d g11 = _mm256_i32gather_pd(u + ny + 1, lin, 8);
    const __m256d v0 = _mm256_fmadd_pd(fxe, _mm256_sub_pd(g10, g00), g00);
    const __m256d v1 = _mm256_fmadd_pd(fxe, _mm256_sub_pd(g11, g01), g01);
    const __m256d vv = _mm256_fmadd_pd(fye, _mm256_sub_pd(v1, v0), v0);
    const __m256d vsel = _mm256_blendv_pd(vc, vv, okd);
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + k),
                          _mm256_sub_pd(vsel, vui), acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; k < K; ++k) {
    int cx, cy;
    double fxe, fye;
    double v = c;
    if (axis_sample(ix, qx[k], fx[k], nx, &cx, &fxe) &&
        axis_sample(iy, qy[k], fy[k], ny, &cy, &fye)) {
      const double* b = u + static_cast<std::size_t>(cx) * ny + cy;
      const double v0 = std::fma(fxe, b[ny] - b[0], b[0]);
      const double v1 = std::fma(fxe, b[ny + 1] - b[1], b[1]);
      v = std::fma(fye, v1 - v0, v0);
    }
    total += w[k] * (v - ui);
  }
  return total;
}

#endif  // __x86_64__

#if defined(__aarch64__)

// NEON variant: two quadrature points per iteration with lane loads standing
// in for gathers.
double ray_planned_2d_neon(const double* u, int nx, int ny, int ix, int iy,
                           double ui, double c, const std::int32_t* qx,
                           const std::int32_t* qy, const double* fx,
                           const double* fy, const double* w, std::size_t K) {
  float64x2_t acc = vdupq_n_f64(0.0);
  const float64x2_t vc = vdupq_n_f64(c);
  const float64x2_t vui = vdupq_n_f64(ui);
  std::size_t k = 0;
  for (; k + 2 <= K; k += 2) {
    double g00[2], g01[2], g10[2], g11[2], fxa[2], fya[2];
    std::uint64_t okbits[2];
    for (int l = 0; l < 2; ++l) {
      int cx, cy;
      double fxe = 0.0, fye = 0.0;
      const bool ok = axis_sample(ix, qx[k + l], fx[k + l], nx, &cx, &fxe) &&
                      axis_sample(iy, qy[k + l], fy[k + l], ny, &cy, &fye);
      okbits[l] = ok ? ~0ULL : 0ULL;
      const int ccx = ok ? cx : 0;
      const int ccy = ok ? cy : 0;
      fxa[l] = fxe;
      fya[l] = fye;
      const double* b = u + static_cast<std::size_t>(ccx) * ny + ccy;
      g00[l] = b[0]; g01[l] = b[1]; g10[l] = b[ny]; g11[l] = b[ny + 1];
    }
    const float64x2_t a00 = vld1q_f64(g00), a01 = vld1q_f64(g01);
    const float64x2_t a10 = vld1q_f64(g10), a11 = vld1q_f64(g11);
    const float64x2_t vfx = vld1q_f64(fxa), vfy = vld1q_f64(fya);
    const float64x2_t v0 = vfmaq_f64(a00, vfx, vsubq_f64(a10, a00));
    const float64x2_t v1 = vfmaq_f64(a01, vfx, vsubq_f64(a11, a01));
    const float64x2_t vv = vfmaq_f64(v0, vfy, vsubq_f64(v1, v0));
    const uint64x2_t mask = vld1q_u64(okbits);
    const float64x2_t vsel = vbslq_f64(mask, vv, vc);
    acc = vfmaq_f64(acc, vld1q_f64(w + k), vsubq_f64(vsel, vui));
  }
  double total = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; k < K; ++k) {
    int cx, cy;
    double fxe, fye;
    double v = c;
    if (axis_sample(ix, qx[k], fx[k], nx, &cx, &fxe) &&
        axis_sample(iy, qy[k], fy[k], ny, &cy, &fye)) {
      const double* b = u + static_cast<std::size_t>(cx) * ny + cy;
      const double v0 = std::fma(fxe, b[ny] - b[0], b[0]);
      const double v1 = std::fma(fxe, b[ny + 1] - b[1], b[1]);
      v = std::fma(fye, v1 - v0, v0);
    }
    total += w[k] * (v - ui);
  }
  return total;
}

#endif  // __aarch64__

}  // namespace

void Sweep::apply_indexed(const std::vector<double>& u, double far_c,
                          std::vector<double>& out, SweepKernel kernel,
                          int threads) const {
  const GridSpec& g = grid_;
  const double* up = u.data();
  const double* wp = w_.data();
  const double* etap = eta_.data();
  const std::size_t K = eta_.size();
  const int nd = dirs_.size();
  const double tw = tail_w_;
  const double cs = cs_;

  parallel_for(g.num_nodes(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const std::array<int, 3> idx = g.unravel(i);
      const double ui = u[i];
      double rmax = 0.0, rmin = 0.0;
      for (int d = 0; d < nd; ++d) {
        const DirPlan& dp = plans_[d];
        double r = 0.0;
        switch (g.dim) {
          case 1:
            r = ray_planned_1d(up, g.n[0], idx[0], ui, far_c, dp.qx.data(),
                               dp.fx.data(), wp, K);
            break;
          case 2:
#if defined(__x86_64__)
            if (kernel == SweepKernel::kAvx2) {
              r = ray_planned_2d_avx2(up, g.n[0], g.n[1], idx[0], idx[1], ui,
                                      far_c, dp.qx.data(), dp.qy.data(),
                                      dp.fx.data(), dp.fy.data(), wp, K);
              break;
            }
#endif
#if defined(__aarch64__)
            if (kernel == SweepKernel::kNeon) {
              r = ray_planned_2d_neon(up, g.n[0], g.n[1], idx[0], idx[1], ui,
                                      far_c, dp.qx.data(), dp.qy.data(),
                                      dp.fx.data(), dp.fy.data(), wp, K);
              break;
            }
#endif
            r = ray_planned_2d(up, g.n[0], g.n[1], idx[0], idx[1], ui, far_c,
                               dp.qx.data(), dp.qy.data(), dp.fx.data(),
                               dp.fy.data(), wp, K);
            break;
          default:
            r = ray_planned_3d(up, g.n[0], g.n[1], g.n[2], idx[0], idx[1],
                               idx[2], ui, far_c, dp.qx.data(), dp.qy.data(),
                               dp.qz.data(), dp.fx.data(), dp.fy.data(),
                               dp.fz.data(), wp, K);
            break;
        }
        r += (far_c - ui) * tw;
        if (d == 0) {
          rmax = rmin = r;
        } else {
          rmax = std::max(rmax, r);
          rmin = std::min(rmin, r);
        }
      }
      if (opt_.augment_gradient) {
        const Vec grad = node_gradient(g, u, idx);
        const double gn = norm(grad, g.dim);
        if (gn > opt_.grad_tol) {
          const Vec zeta = scaled(grad, 1.0 / gn, g.dim);
          for (const Vec& y : {zeta, scaled(zeta, -1.0, g.dim)}) {
            double r = ray_bespoke(up, g, idx, ui, far_c, y, etap, wp, K);
            r += (far_c - ui) * tw;
            rmax = std::max(rmax, r);
            rmin = std::min(rmin, r);
          }
        }
      }
      out[i] = cs * (rmax + rmin);
    }
  });
}

void Sweep::apply_reference(const std::vector<double>& u, double far_c,
                            std::vector<double>& out, int threads) const {
  // Same quadrature plan as the indexed kernels, but every sample value comes
  // from SampledField::eval in physical coordinates (its own interpolation
  // and far-field code), so kernel indexing errors cannot cancel here.
  const GridSpec& g = grid_;
  SampledField field(g, ExtensionPolicy::constant_far_field(far_c),
                     std::vector<double>(u));
  const int nd = dirs_.size();
  const std::size_t K = eta_.size();

  const auto ray = [&](const Vec& x, double ui, const Vec& y) {
    double acc = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      Vec p{0.0, 0.0, 0.0};
      for (int a = 0; a < g.dim; ++a) p[a] = x[a] + eta_[k] * y[a];
      acc += w_[k] * (field.eval(p) - ui);
    }
    return acc + (far_c - ui) * tail_w_;
  };

  parallel_for(g.num_nodes(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const std::array<int, 3> idx = g.unravel(i);
      const Vec x = g.point(idx);
      const double ui = u[i];
      double rmax = 0.0, rmin = 0.0;
      for (int d = 0; d < nd; ++d) {
        const double r = ray(x, ui, dirs_.at(d));
        if (d == 0) {
          rmax = rmin = r;
        } else {
          rmax = std::max(rmax, r);
          rmin = std::min(rmin, r);
        }
      }
      if (opt_.augment_gradient) {
        const Vec grad = node_gradient(g, u, idx);
        const double gn = norm(grad, g.dim);
        if (gn > opt_.grad_tol) {
          const Vec zeta = scaled(grad, 1.0 / gn, g.dim);
          for (const Vec& y : {zeta, scaled(zeta, -1.0, g.dim)}) {
            rmax = std::max(rmax, ray(x, ui, y));
            rmin = std::min(rmin, ray(x, ui, y));
          }
        }
      }
      out[i] = cs_ * (rmax + rmin);
    }
  });
}

void Sweep::apply(const std::vector<double>& u, double far_c,
                  std::vector<double>& out, SweepKernel kernel,
                  int threads) const {
  require(u.size() == grid_.num_nodes(), "Sweep::apply: value count mismatch");
  out.resize(u.size());
  const SweepKernel k = resolve_kernel(kernel, grid_.dim);
  if (k == SweepKernel::kReference) {
    apply_reference(u, far_c, out, threads);
  } else {
    apply_indexed(u, far_c, out, k, threads);
  }
}

}  // namespace ifl
