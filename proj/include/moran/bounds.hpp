// Symmetric eigensolver (cyclic Jacobi) and the three bound sets that
// constrain the autocorrelation index:
//
//   set1: spectrum of nW, which brackets I by the Rayleigh quotient argument;
//   set2: spectrum of (nW)'(nW), which brackets I^2 + ((Wz)'o)^2 + sigma_e^2;
//   set3: [0, n(Wz)'Wz], the rank-one bound on I^2 from the outer product
//         n W'zz'W = n (Wz)(Wz)', whose single nonzero eigenvalue is n(Wz)'Wz.
//
// set3 is evaluated analytically from the rank-one factorization (exact and
// O(n)); tests cross-check it against the eigensolver.

#pragma once

#include <array>

#include "moran/common.hpp"
#include "moran/models.hpp"
#include "moran/table.hpp"
#include "moran/weights.hpp"

namespace moran {

struct EigenDecomposition {
  Vector eigenvalues;            // sorted ascending
  Matrix eigenvectors;           // columns, aligned with eigenvalues; empty unless requested
  double max_offdiag_residual = 0;  // remaining off-diagonal Frobenius mass
  int sweeps = 0;
};

// Cyclic Jacobi rotations. Converges when the off-diagonal Frobenius mass
// drops below 1e-14 * ||m||_F, capped at 100 sweeps. Input must be symmetric
// within 1e-12 (max |a_ij - a_ji|) and no larger than 10000x10000.
EigenDecomposition symmetric_eigenvalues(const Matrix& m, bool with_vectors = false);

// v'Mv / v'v for symmetric m; rejects the zero vector.
double rayleigh_quotient(const Matrix& m, const Vector& v);

struct BoundsReport {
  std::array<double, 2> set1{};  // [lambda_min, lambda_max] of nW
  std::array<double, 2> set2{};  // [lambda*_min, lambda*_max] of (nW)'(nW)
  std::array<double, 2> set3{};  // [0, n(Wz)'Wz]

  double index = 0;                      // I, echoed for reporting
  double set2_quantity = 0;              // I^2 + ((Wz)'o)^2 + sigma_e^2
  double set2_theoretical_quantity = 0;  // I^2 + ((Wz)'o)^2 (error-free form)
  double set2_crosscheck_max_diff = 0;   // product spectrum vs squared spectrum
  double set3_quantity = 0;              // I^2

  bool set1_satisfied = false;
  bool set2_satisfied = false;
  bool set3_satisfied = false;

  // Interval for I implied by intersecting the three sets after converting
  // the quadratic constraints into symmetric intervals in I. The conversion
  // discards the sign information of the quadratic constraints.
  std::array<double, 2> intersection_for_I{};

  double attain_lower = 0;  // I - lambda_min
  double attain_upper = 0;  // lambda_max - I
};

// `fit` must be the with-intercept fit for (w, z); its residual variance
// enters the empirical form of set2.
BoundsReport compute_bounds(const WeightMatrix& w, const StandardizedVector& z,
                            const ModelFit& fit);

}  // namespace moran
