// Shared aliases, error types and the tolerance table used across the library.

#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace moran {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad or unreadable input files (CSV parsing, shape/validity violations).
class LoadError : public Error {
 public:
  explicit LoadError(const std::string& msg) : Error(msg) {}
};

// Mathematically inadmissible arguments (constant vector, non-positive
// value under log, zero vector, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Mismatched sizes between matrices and vectors.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Numerical failure: non-convergence, near-singular systems, broken
// self-consistency checks.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

// All tolerances live here so reports can echo them and tests can pin them.
struct Tolerances {
  double weight_sum = 1e-12;         // |sum(W) - 1| after global normalization
  double standardize_per_n = 1e-10;  // |sum z| and |z'z - n|, scaled by n
  double recompute = 1e-12;          // internal self-consistency recomputation
  double identity_pass = 1e-9;       // PASS/FAIL threshold for identity checks
  double route_agreement = 1e-9;     // max |da|, |db| across estimation routes
  double slope_equality = 1e-10;     // with- vs zero-intercept slope
  double bounds_slack = 1e-9;        // containment slack for the bound sets
  double spectral_crosscheck = 1e-8; // squared spectrum vs product spectrum
  double getis_identity = 1e-12;     // outer-product identity for Getis-Ord
  double symmetry_abs = 1e-12;       // max |a_ij - a_ji| accepted as symmetric
  double jacobi_offdiag = 1e-14;     // off-diagonal mass relative to ||A||_F
  int jacobi_max_sweeps = 100;
};

inline const Tolerances& tol() {
  static const Tolerances t;
  return t;
}

}  // namespace moran
