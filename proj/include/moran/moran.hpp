// The quadratic-form index I = z'Wz, its rank-one characteristic equation
// z z'W z = I z, and the Getis-Ord analog G = p'Wp on a unit-normalized
// positive vector.

#pragma once

#include "moran/common.hpp"
#include "moran/table.hpp"
#include "moran/weights.hpp"

namespace moran {

struct MoranResult {
  double index = 0;      // z'Wz
  Eigen::Index n = 0;
  Vector lag;            // Wz
  double lag_sum = 0;    // (Wz)'o
  double lag_norm2 = 0;  // (Wz)'(Wz)
};

MoranResult moran_index(const WeightMatrix& w, const StandardizedVector& z);

struct OuterProductCheck {
  double residual = 0;        // || z (z'Wz) - I z ||_inf
  double trace_residual = 0;  // | trace(z z'W) - I |
  // Spectrum of z z'W (rank one, single nonzero eigenvalue I):
  double eigen_offset = 0;    // distance of the closest eigenvalue to I
  double eigen_spurious = 0;  // largest magnitude among the remaining ones
  bool eigen_checked = false; // spectral part runs only for small n
};

// z z'W is not symmetric; its eigenvalues are obtained through the similarity
// det(lam Id - XY) = det(lam Id - YX) applied to X = z z', Y = W, which turns
// the problem into the symmetric one (z z') W (z z') / (z'z).
OuterProductCheck outer_product_check(const WeightMatrix& w, const StandardizedVector& z,
                                      Eigen::Index eigen_n_cap = 12);

struct GetisOrdResult {
  double index = 0;  // p'Wp
  Vector p;          // x / ||x||_2
  double zeta = 1;   // p'p
  double identity_residual = 0;  // || p (p'Wp) - G p ||_inf
};

GetisOrdResult getis_ord_index(const WeightMatrix& w, const Vector& x);

}  // namespace moran
