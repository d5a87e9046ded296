#include "ifl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace ifl {

namespace {

GaussLegendre compute_gauss_legendre(int n) {
  require(n >= 1 && n <= 64, "gauss_legendre: order out of range");
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev-like initial guess for the i-th root of P_n, then Newton.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    gl.nodes[i] = x;
    gl.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  // Roots come out in decreasing order of cos; store increasing.
  std::reverse(gl.nodes.begin(), gl.nodes.end());
  std::reverse(gl.weights.begin(), gl.weights.end());
  return gl;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

double tail_weight(double cut, double s) {
  return std::pow(cut, -2.0 * s) / (2.0 * s);
}

std::vector<double> build_panels(double lo, double hi, int panels_per_decade,
                                 const std::vector<double>& breakpoints,
                                 double max_panel_width) {
  require(lo > 0.0 && hi > lo, "build_panels: need 0 < lo < hi");
  require(panels_per_decade >= 1, "build_panels: panels_per_decade >= 1");
  double ratio = std::pow(10.0, 1.0 / panels_per_decade);
  std::vector<double> edges;
  for (double e = lo; e < hi; e *= ratio) edges.push_back(e);
  edges.push_back(hi);
  for (double b : breakpoints) {
    if (b > lo && b < hi) edges.push_back(b);
  }
  std::sort(edges.begin(), edges.end());
  // Merge near-coincident edges (relative to local scale).
  std::vector<double> merged;
  merged.reserve(edges.size());
  for (double e : edges) {
    if (merged.empty() || e - merged.back() > 1e-12 * e) merged.push_back(e);
  }
  if (merged.back() != hi) merged.back() = hi;
  if (max_panel_width > 0.0) {
    std::vector<double> capped;
    capped.push_back(merged.front());
    for (std::size_t i = 1; i < merged.size(); ++i) {
      double a = merged[i - 1], b = merged[i];
      int parts = static_cast<int>(std::ceil((b - a) / max_panel_width));
      for (int p = 1; p < parts; ++p) capped.push_back(a + (b - a) * p / parts);
      capped.push_back(b);
    }
    merged.swap(capped);
  }
  return merged;
}

std::vector<double> ray_breakpoints(const Vec& x, const Vec& y, int dim,
                                    const std::vector<double>& radii,
                                    double lo_exclusive, double hi) {
  std::vector<double> out;
  double b = dot(x, y, dim);        // |y| = 1
  double x2 = dot(x, x, dim);
  for (double rho : radii) {
    double disc = b * b - (x2 - rho * rho);
    if (disc < 0.0) continue;
    double sq = std::sqrt(disc);
    for (double eta : {-b - sq, -b + sq}) {
      if (eta > lo_exclusive && eta < hi) out.push_back(eta);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

double resolve_cut(const ScalarField& f, const Vec& x, const QuadRule& rule) {
  if (rule.cut > 0.0) return rule.cut;
  auto cb = f.constant_beyond();
  require(cb.has_value(),
          "quadrature: cut radius is auto but the field declares no constant tail");
  return *cb + norm(x, f.dim());
}

}  // namespace

RayIntegral integrate_ray(const ScalarField& f, const Vec& x, const Vec& y,
                          double s, const QuadRule& rule) {
  const int dim = f.dim();
  const double cut = resolve_cut(f, x, rule);
  require(rule.eps > 0.0 && cut > rule.eps, "integrate_ray: need 0 < eps < cut");
  const double phix = f.eval(x);
  const std::vector<double> bps =
      ray_breakpoints(x, y, dim, f.jump_radii(), rule.eps, cut);
  const std::vector<double> edges =
      build_panels(rule.eps, cut, rule.panels_per_decade, bps, rule.max_panel_width);
  const GaussLegendre& gl = gauss_legendre(rule.nodes_per_panel);

  double acc = 0.0;   // sum of w * (phi(x + eta y) - phi(x))
  double wsum = 0.0;  // sum of w
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p], b = edges[p + 1];
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int k = 0; k < rule.nodes_per_panel; ++k) {
      const double eta = mid + half * gl.nodes[k];
      const double w = half * gl.weights[k] * std::pow(eta, -1.0 - 2.0 * s);
      acc += w * (f.eval(axpy(x, eta, y, dim)) - phix);
      wsum += w;
    }
  }

  RayIntegral out;
  if (rule.tail == TailMode::kAnalyticConstantTail) {
    auto c = f.ray_far_value(x, y);
    require(c.has_value(),
            "integrate_ray: analytic constant tail needs a field far value");
    const double tw = tail_weight(cut, s);
    if (rule.renormalize) {
      const double target = std::pow(rule.eps, -2.0 * s) / (2.0 * s);
      const double rho = (target - tw) / wsum;
      require(std::fabs(rho - 1.0) < 1e-3,
              "integrate_ray: weight renormalization factor is far from 1");
      out.value = rho * acc + (*c - phix) * tw;
      out.weight_sum = target;
      out.renormalized = true;
    } else {
      out.value = acc + (*c - phix) * tw;
      out.weight_sum = wsum + tw;
    }
  } else {
    out.value = acc;
    out.weight_sum = wsum;
  }
  return out;
}

namespace {

// Split radius for the near-zero treatment: at most a quarter of the cut,
// clamped down to the first declared jump crossing along +/- y.
double resolve_delta(const ScalarField& f, const Vec& x, const Vec& y,
                     double cut, const QuadRule& rule) {
  double delta = rule.delta > 0.0 ? rule.delta : std::min(1.0, 0.25 * cut);
  const auto radii = f.jump_radii();
  if (!radii.empty()) {
    for (const Vec& dir : {y, scaled(y, -1.0, f.dim())}) {
      auto bp = ray_breakpoints(x, dir, f.dim(), radii, 0.0, delta);
      if (!bp.empty()) delta = bp.front();
    }
  }
  return delta;
}

double resolve_eta_min(double delta, const QuadRule& rule) {
  // Below ~1e-5 * delta, differences of an O(1) field sink under rounding
  // noise which the eta^(-1-2s) weight then amplifies; the true mass omitted
  // below the floor is covered by the closed-form quadratic term.
  double em = rule.eta_min > 0.0 ? rule.eta_min : 1e-5 * delta;
  require(delta > 4.0 * em, "quadrature: split radius too close to eta floor");
  return em;
}

// Graded Gauss-Legendre integral of g(eta) * eta^(-1-2s) over [lo, hi].
template <class G>
double graded_integral(G&& g, double lo, double hi, double s, const QuadRule& rule) {
  const std::vector<double> edges =
      build_panels(lo, hi, rule.panels_per_decade, {}, 0.0);
  const GaussLegendre& gl = gauss_legendre(rule.nodes_per_panel);
  double acc = 0.0;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double mid = 0.5 * (edges[p] + edges[p + 1]);
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    for (int k = 0; k < rule.nodes_per_panel; ++k) {
      const double eta = mid + half * gl.nodes[k];
      acc += half * gl.weights[k] * g(eta) * std::pow(eta, -1.0 - 2.0 * s);
    }
  }
  return acc;
}

}  // namespace

PairIntegral integrate_pair(const ScalarField& f, const Vec& x, const Vec& y,
                            double s, const QuadRule& rule) {
  const int dim = f.dim();
  const double cut = resolve_cut(f, x, rule);
  const double delta = resolve_delta(f, x, y, cut, rule);
  const double eta_min = resolve_eta_min(delta, rule);
  const double phix = f.eval(x);

  auto pair_diff = [&](double eta) {
    return f.eval(axpy(x, eta, y, dim)) + f.eval(axpy(x, -eta, y, dim)) - 2.0 * phix;
  };

  // Second difference coefficient by Richardson extrapolation; its residual
  // error cancels between the closed-form term and the remainder integral.
  const double h1 = delta / 32.0, h2 = delta / 64.0;
  const double d1 = pair_diff(h1) / (h1 * h1);
  const double d2 = pair_diff(h2) / (h2 * h2);
  const double qhat = (4.0 * d2 - d1) / 3.0;

  // Closed form of the quadratic model over the whole of [0, delta]; the
  // remainder integrand vanishes like eta^(3.5) at 0, so starting it at
  // eta_min > 0 (to stay above rounding noise) loses only O(eta_min^3.5).
  const double near_closed =
      qhat * std::pow(delta, 2.0 - 2.0 * s) / (2.0 - 2.0 * s);
  const double near_rest = graded_integral(
      [&](double eta) { return pair_diff(eta) - qhat * eta * eta; },
      eta_min, delta, s, rule);

  QuadRule far = rule;
  far.eps = delta;
  far.cut = cut;
  const double v_plus = integrate_ray(f, x, y, s, far).value;
  const double v_minus = integrate_ray(f, x, scaled(y, -1.0, dim), s, far).value;

  PairIntegral out;
  out.value = near_closed + near_rest + v_plus + v_minus;
  out.delta = delta;
  out.curvature = qhat;
  return out;
}

PairIntegral integrate_one_sided(const ScalarField& f, const Vec& x, const Vec& y,
                                 double s, const QuadRule& rule) {
  const int dim = f.dim();
  const double cut = resolve_cut(f, x, rule);
  const double delta = resolve_delta(f, x, y, cut, rule);
  const double eta_min = resolve_eta_min(delta, rule);
  const double phix = f.eval(x);

  auto fwd_diff = [&](double eta) { return f.eval(axpy(x, eta, y, dim)) - phix; };
  auto pair_diff = [&](double eta) {
    return f.eval(axpy(x, eta, y, dim)) + f.eval(axpy(x, -eta, y, dim)) - 2.0 * phix;
  };

  // The slope residual is weighted by eta^(-2s), which concentrates near the
  // eta floor, so the slope needs a much finer stencil than the curvature.
  const double hg1 = delta / 128.0, hg2 = delta / 256.0;
  const double g1 = (f.eval(axpy(x, hg1, y, dim)) - f.eval(axpy(x, -hg1, y, dim))) / (2.0 * hg1);
  const double g2 = (f.eval(axpy(x, hg2, y, dim)) - f.eval(axpy(x, -hg2, y, dim))) / (2.0 * hg2);
  const double ghat = (4.0 * g2 - g1) / 3.0;
  const double h1 = delta / 32.0, h2 = delta / 64.0;
  const double d1 = pair_diff(h1) / (h1 * h1);
  const double d2 = pair_diff(h2) / (h2 * h2);
  const double qhat = (4.0 * d2 - d1) / 3.0;

  // This routine is only valid at critical points: the measured slope ghat is
  // rounding noise there, so it is subtracted from the integrand and its
  // (divergent) closed-form contribution is dropped rather than added back.
  const double half_q = 0.5 * qhat;
  const double near_closed =
      half_q * std::pow(delta, 2.0 - 2.0 * s) / (2.0 - 2.0 * s);
  const double near_rest = graded_integral(
      [&](double eta) { return fwd_diff(eta) - ghat * eta - half_q * eta * eta; },
      eta_min, delta, s, rule);

  QuadRule far = rule;
  far.eps = delta;
  far.cut = cut;
  const double v_far = integrate_ray(f, x, y, s, far).value;

  PairIntegral out;
  out.value = near_closed + near_rest + v_far;
  out.delta = delta;
  out.curvature = qhat;
  return out;
}

}  // namespace ifl
