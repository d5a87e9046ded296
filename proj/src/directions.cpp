#include "ifl/directions.hpp"

#include <cmath>

namespace ifl {

namespace {

// cos/sin of exact multiples of pi/2 come back as ~1e-16 residue instead of
// 0.  A direction like (-1.8e-16, -1) is poison for grid-aligned sampling: a
// ray from a face node drifts out of the box in index arithmetic but rounds
// back onto the face in coordinate arithmetic, so the two ray evaluators
// disagree about entire ray segments.  Snap to the exact axis vector.
Vec snap_axis(Vec v, int dim) {
  constexpr double kTol = 1e-14;
  int live = -1;
  for (int a = 0; a < dim; ++a) {
    if (std::fabs(v[a]) >= kTol) {
      if (live >= 0) return v;  // two live components: not an axis direction
      live = a;
    }
  }
  if (live < 0) return v;
  Vec out = {0.0, 0.0, 0.0};
  out[live] = std::copysign(1.0, v[live]);
  return out;
}

}  // namespace

DirectionSet DirectionSet::uniform(int dim, int count) {
  DirectionSet d;
  d.dim_ = dim;
  require(dim >= 1 && dim <= 3, "DirectionSet: dim must be 1, 2 or 3");
  if (dim == 1) {
    d.dirs_ = {vec1(1.0), vec1(-1.0)};
    return d;
  }
  require(count >= 2 && count % 2 == 0, "DirectionSet: count must be even and >= 2");
  if (dim == 2) {
    // k and k + count/2 are antipodal since the angles differ by pi.
    d.dirs_.reserve(count);
    for (int k = 0; k < count; ++k) {
      double a = 2.0 * kPi * k / count;
      d.dirs_.push_back(snap_axis(vec2(std::cos(a), std::sin(a)), 2));
    }
    return d;
  }
  // Golden-angle spiral on the open upper hemisphere, then the antipodes.
  int h = count / 2;
  const double ga = kPi * (3.0 - std::sqrt(5.0));
  d.dirs_.reserve(count);
  for (int k = 0; k < h; ++k) {
    double z = (k + 0.5) / h;  // strictly inside (0, 1): no equator duplicates
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    double a = ga * k;
    d.dirs_.push_back(snap_axis(vec3(r * std::cos(a), r * std::sin(a), z), 3));
  }
  for (int k = 0; k < h; ++k) d.dirs_.push_back(scaled(d.dirs_[k], -1.0, 3));
  return d;
}

}  // namespace ifl
