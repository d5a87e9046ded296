#pragma once

#include <vector>

#include "ifl/math_util.hpp"

namespace ifl {

// Finite set of unit directions, closed under y -> -y with the antipode of
// entry k stored at k + size()/2 (k < size()/2). The sup/inf search over rays
// uses this pairing to turn two-sided integrals into sums of one-sided ones.
class DirectionSet {
 public:
  // dim 1: {+1, -1} (count ignored). dim 2: count equally spaced angles.
  // dim 3: count/2 spiral points on the upper hemisphere plus antipodes.
  static DirectionSet uniform(int dim, int count);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(dirs_.size()); }
  const Vec& at(int k) const { return dirs_[k]; }
  int antipode(int k) const {
    int h = size() / 2;
    return k < h ? k + h : k - h;
  }
  const std::vector<Vec>& all() const { return dirs_; }

 private:
  int dim_ = 2;
  std::vector<Vec> dirs_;
};

}  // namespace ifl
