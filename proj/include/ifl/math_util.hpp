#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifl {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Point in up to three dimensions; unused trailing components stay zero.
using Vec = std::array<double, 3>;

inline Vec vec1(double x) { return {x, 0.0, 0.0}; }
inline Vec vec2(double x, double y) { return {x, y, 0.0}; }
inline Vec vec3(double x, double y, double z) { return {x, y, z}; }

inline double dot(const Vec& a, const Vec& b, int dim) {
  double r = 0.0;
  for (int i = 0; i < dim; ++i) r += a[i] * b[i];
  return r;
}

inline double norm(const Vec& a, int dim) { return std::sqrt(dot(a, a, dim)); }

inline Vec axpy(const Vec& x, double eta, const Vec& y, int dim) {
  Vec r{0.0, 0.0, 0.0};
  for (int i = 0; i < dim; ++i) r[i] = x[i] + eta * y[i];
  return r;
}

inline Vec scaled(const Vec& y, double a, int dim) {
  Vec r{0.0, 0.0, 0.0};
  for (int i = 0; i < dim; ++i) r[i] = a * y[i];
  return r;
}

// Thrown when a computation leaves its domain of validity (NaN, divergent
// iteration, invalid runtime parameter combination discovered mid-run).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw NumericalError(msg);
}

// Deterministic 64-bit mix (splitmix64); used to derive per-purpose substream
// seeds from one run seed so that thread count never changes random draws.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d4a2c62d02b26fULL;
  return z ^ (z >> 31);
}

// Least-squares slope of log(v) against log(a) over matching entries.
inline double loglog_slope(const std::vector<double>& a,
                           const std::vector<double>& v) {
  require(a.size() == v.size() && a.size() >= 2, "loglog_slope: need >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] > 0.0) || !(v[i] > 0.0)) continue;
    double x = std::log(a[i]), y = std::log(v[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++n;
  }
  require(n >= 2, "loglog_slope: need >= 2 positive points");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace ifl
