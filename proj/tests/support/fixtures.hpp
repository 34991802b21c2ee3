// Shared hand-checked fixtures. The three-city instance has distances
// r = [[0,1,2],[1,0,1],[2,1,0]], giving v0 = 5 and off-diagonal weights
// 0.2 / 0.1 / 0.2. With x = [1,2,3] the standardized vector is an exact
// eigenvector of nW (index -0.3, zero residuals); x = [1,2,4] breaks the
// symmetry and exercises every nonzero term.

#pragma once

#include <string>
#include <vector>

#include "moran/table.hpp"
#include "moran/weights.hpp"

namespace fixtures {

inline std::vector<std::string> three_city_ids() { return {"a", "b", "c"}; }

inline moran::DistanceMatrix three_city_distances() {
  moran::Matrix r(3, 3);
  r << 0, 1, 2,
       1, 0, 1,
       2, 1, 0;
  return moran::DistanceMatrix::validated(three_city_ids(), r);
}

inline moran::WeightMatrix three_city_weights() {
  return moran::normalize_global(
      moran::inverse_distance_contiguity(three_city_distances()));
}

inline moran::Vector x_123() {
  moran::Vector x(3);
  x << 1, 2, 3;
  return x;
}

inline moran::Vector x_124() {
  moran::Vector x(3);
  x << 1, 2, 4;
  return x;
}

inline moran::StandardizedVector z_123() { return moran::standardize(x_123(), false); }
inline moran::StandardizedVector z_124() { return moran::standardize(x_124(), false); }

// w_ij = 1/(n(n-1)) off the diagonal; forces I = -1/(n-1) for every valid z.
inline moran::WeightMatrix uniform_weights(Eigen::Index n) {
  const double off = 1.0 / (static_cast<double>(n) * static_cast<double>(n - 1));
  moran::Matrix w = moran::Matrix::Constant(n, n, off);
  w.diagonal().setZero();
  return moran::WeightMatrix::validated(std::move(w));
}

// Two disjoint pairs with weight 1/4 each; z = (1,1,-1,-1) is an eigenvector
// of nW with eigenvalue 1, the perfect-autocorrelation limit.
inline moran::WeightMatrix paired_weights() {
  moran::Matrix w = moran::Matrix::Zero(4, 4);
  w(0, 1) = w(1, 0) = 0.25;
  w(2, 3) = w(3, 2) = 0.25;
  return moran::WeightMatrix::validated(std::move(w));
}

inline moran::StandardizedVector paired_z() {
  moran::Vector x(4);
  x << 1, 1, -1, -1;
  return moran::standardize(x, false);
}

}  // namespace fixtures
