// Spatial weights: inverse-distance contiguity and global normalization.
//
// The weight matrix is globally normalized (grand sum 1), symmetric,
// non-negative, with a zero diagonal. Only this scheme is provided; row
// normalization would break the symmetry every derivation downstream relies on.

#pragma once

#include <string>
#include <vector>

#include "moran/common.hpp"
#include "moran/table.hpp"

namespace moran {

struct ContiguityMatrix {
  Matrix v;       // symmetric, non-negative, zero diagonal
  double v0 = 0;  // grand sum of all entries

  // Validates symmetry, non-negativity, zero diagonal; computes v0.
  static ContiguityMatrix validated(Matrix v);
};

struct WeightMatrix {
  Matrix w;
  Eigen::Index n = 0;

  // Validates symmetry, non-negativity, zero diagonal and |sum - 1| <= 1e-12.
  static WeightMatrix validated(Matrix w);
};

// v_ij = 1/r_ij off the diagonal, v_ii = 0.
ContiguityMatrix inverse_distance_contiguity(const DistanceMatrix& d);

// w = v / v0, so the entries of w sum to 1.
WeightMatrix normalize_global(const ContiguityMatrix& v);

// The weighted average vector Wz.
Vector spatial_lag(const WeightMatrix& w, const StandardizedVector& z);

// Square CSV dump, same layout as the distance input.
void write_weight_matrix(const WeightMatrix& w, const std::vector<std::string>& ids,
                         const std::string& path, char delimiter = ',');

}  // namespace moran
