#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "moran/bounds.hpp"
#include "moran/random_instance.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using moran::DomainError;
using moran::Matrix;
using moran::Vector;

TEST_CASE("jacobi solves a diagonal matrix trivially") {
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 3, 1, 2;
  const auto spec = moran::symmetric_eigenvalues(d);
  CHECK(spec.eigenvalues(0) == 1.0);
  CHECK(spec.eigenvalues(1) == 2.0);
  CHECK(spec.eigenvalues(2) == 3.0);
  CHECK(spec.sweeps == 0);
}

TEST_CASE("jacobi reproduces the three-city spectrum of nW") {
  // Characteristic polynomial x^3 - 0.81x - 0.216 with roots
  // -0.3 and (0.3 +- sqrt(2.97))/2.
  const Matrix nw = 3.0 * fixtures::three_city_weights().w;
  const auto spec = moran::symmetric_eigenvalues(nw);
  const double lo = (0.3 - std::sqrt(2.97)) / 2.0;
  const double hi = (0.3 + std::sqrt(2.97)) / 2.0;
  CHECK(spec.eigenvalues(0) == doctest::Approx(lo).epsilon(1e-12));
  CHECK(spec.eigenvalues(1) == doctest::Approx(-0.3).epsilon(1e-12));
  CHECK(spec.eigenvalues(2) == doctest::Approx(hi).epsilon(1e-12));
  for (Eigen::Index i = 0; i < 3; ++i) {
    const double x = spec.eigenvalues(i);
    CHECK(std::abs(x * x * x - 0.81 * x - 0.216) <= 1e-12);
  }
}

TEST_CASE("uniform weights: spectrum of nW is -1/(n-1) repeated, plus 1") {
  for (int n : {3, 5, 11}) {
    const Matrix nw = static_cast<double>(n) * fixtures::uniform_weights(n).w;
    const auto spec = moran::symmetric_eigenvalues(nw);
    for (int i = 0; i < n - 1; ++i) {
      CHECK(spec.eigenvalues(i) == doctest::Approx(-1.0 / (n - 1)).epsilon(1e-12));
    }
    CHECK(spec.eigenvalues(n - 1) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("jacobi matches the inertia-bisection oracle on random matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = 2 + trial % 11;  // up to 12
    const Matrix a = oracles::random_symmetric(n, rng);
    const auto spec = moran::symmetric_eigenvalues(a);
    const auto expected = oracles::eigenvalues_bisection(a);
    REQUIRE(spec.eigenvalues.size() == static_cast<Eigen::Index>(expected.size()));
    for (Eigen::Index i = 0; i < n; ++i) {
      CHECK(std::abs(spec.eigenvalues(i) - expected[static_cast<std::size_t>(i)]) <=
            1e-7);
    }
  }
}

TEST_CASE("jacobi eigenvectors reconstruct the input") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 3 + trial % 8;
    const Matrix a = oracles::random_symmetric(n, rng);
    const auto spec = moran::symmetric_eigenvalues(a, true);
    REQUIRE(spec.eigenvectors.cols() == n);
    const Matrix recon = spec.eigenvectors * spec.eigenvalues.asDiagonal() *
                         spec.eigenvectors.transpose();
    const double scale = a.cwiseAbs().maxCoeff();
    CHECK((recon - a).cwiseAbs().maxCoeff() <= 1e-9 * scale);
    // Orthonormal columns.
    const Matrix gram = spec.eigenvectors.transpose() * spec.eigenvectors;
    CHECK((gram - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("jacobi rejects asymmetric and non-square input") {
  Matrix bad(2, 2);
  bad << 0, 1, 0.5, 0;
  CHECK_THROWS_AS(moran::symmetric_eigenvalues(bad), DomainError);
  CHECK_THROWS_AS(moran::symmetric_eigenvalues(Matrix::Zero(2, 3)),
                  moran::DimensionError);
}

TEST_CASE("rayleigh quotient basics") {
  const auto w = fixtures::three_city_weights();
  const auto z = fixtures::z_123();
  const Matrix nw = 3.0 * w.w;
  // z is an eigenvector here, so the quotient is the eigenvalue = I.
  CHECK(moran::rayleigh_quotient(nw, z.z) == doctest::Approx(-0.3).epsilon(1e-12));

  const auto spec = moran::symmetric_eigenvalues(nw, true);
  for (Eigen::Index i = 0; i < 3; ++i) {
    CHECK(moran::rayleigh_quotient(nw, spec.eigenvectors.col(i)) ==
          doctest::Approx(spec.eigenvalues(i)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(moran::rayleigh_quotient(nw, Vector::Zero(3)), DomainError);
}

TEST_CASE("rayleigh quotient of nW at z equals the index on random instances") {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 14;
    const auto inst = moran::random_instance(n, 3100 + static_cast<unsigned>(trial));
    const auto w = moran::normalize_global(moran::inverse_distance_contiguity(inst.dist));
    const auto z = moran::standardize(inst.table.column("x"), false);
    const double index = z.z.dot(w.w * z.z);
    CHECK(moran::rayleigh_quotient(static_cast<double>(n) * w.w, z.z) ==
          doctest::Approx(index).epsilon(1e-12));
  }
}

TEST_CASE("bounds on the eigenvector fixture: set3 attained") {
  const auto w = fixtures::three_city_weights();
  const auto z = fixtures::z_123();
  const auto fit = moran::fit_with_intercept(w, z);
  const auto b = moran::compute_bounds(w, z, fit);

  CHECK(b.index == doctest::Approx(-0.3).epsilon(1e-12));
  CHECK(b.set1[0] == doctest::Approx((0.3 - std::sqrt(2.97)) / 2).epsilon(1e-10));
  CHECK(b.set1[1] == doctest::Approx((0.3 + std::sqrt(2.97)) / 2).epsilon(1e-10));
  CHECK(b.set1_satisfied);
  CHECK(b.set2_satisfied);
  CHECK(b.set3_satisfied);
  // I^2 = n(Wz)'Wz = 0.09 exactly: the rank-one bound is attained.
  CHECK(b.set3[1] == doctest::Approx(0.09).epsilon(1e-12));
  CHECK(b.set3_quantity == doctest::Approx(0.09).epsilon(1e-12));
  CHECK(b.set2[1] == doctest::Approx(std::pow((0.3 + std::sqrt(2.97)) / 2, 2))
                         .epsilon(1e-10));
  CHECK(b.set2_quantity == doctest::Approx(0.09).epsilon(1e-12));  // sigma_e2 = 0
  CHECK(b.set2_crosscheck_max_diff <= 1e-8);
  CHECK(b.attain_lower == doctest::Approx(-0.3 - b.set1[0]).epsilon(1e-12));
}

TEST_CASE("bounds on the general fixture: strict containments") {
  const auto w = fixtures::three_city_weights();
  const auto z = fixtures::z_124();
  const auto fit = moran::fit_with_intercept(w, z);
  const auto b = moran::compute_bounds(w, z, fit);
  CHECK(b.set3[1] == doctest::Approx(0.105).epsilon(1e-12));
  CHECK(b.set3_quantity == doctest::Approx(std::pow(11.0 / 35.0, 2)).epsilon(1e-12));
  CHECK(b.set3_quantity < b.set3[1]);
  CHECK(b.set1_satisfied);
  CHECK(b.set2_satisfied);
  CHECK(b.set3_satisfied);
  CHECK(b.intersection_for_I[0] <= b.index);
  CHECK(b.index <= b.intersection_for_I[1]);
}

TEST_CASE("uniform weights: I attains the lower spectral bound") {
  const int n = 5;
  std::mt19937_64 rng(5150);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  Vector x(n);
  for (int i = 0; i < n; ++i) x(i) = u(rng);
  const auto z = moran::standardize(x, false);
  const auto w = fixtures::uniform_weights(n);
  const auto fit = moran::fit_with_intercept(w, z);
  const auto b = moran::compute_bounds(w, z, fit);
  CHECK(b.set1[0] == doctest::Approx(-0.25).epsilon(1e-10));
  CHECK(b.set1[1] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(b.index == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(std::abs(b.attain_lower) <= 1e-10);
}

TEST_CASE("bound containments and spectral cross-check on random instances") {
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 28;
    const auto inst = moran::random_instance(n, 6000 + static_cast<unsigned>(trial));
    const auto w = moran::normalize_global(moran::inverse_distance_contiguity(inst.dist));
    const auto z = moran::standardize(inst.table.column("x"), false);
    const auto fit = moran::fit_with_intercept(w, z);
    const auto b = moran::compute_bounds(w, z, fit);
    CAPTURE(trial);
    CHECK(b.set1_satisfied);
    CHECK(b.set2_satisfied);
    CHECK(b.set3_satisfied);
    CHECK(b.set2[0] >= -1e-12);
    CHECK(b.set3[0] == 0.0);
    CHECK(b.set2_crosscheck_max_diff <= 1e-8);
    // I itself lies in the derived intersection interval.
    CHECK(b.intersection_for_I[0] - 1e-9 <= b.index);
    CHECK(b.index <= b.intersection_for_I[1] + 1e-9);
  }
}

TEST_CASE("rank-one outer-product matrix has the analytic spectrum") {
  // n W'z z'W = n (Wz)(Wz)' is PSD with single nonzero eigenvalue
  // n (Wz)'Wz; compute_bounds takes this analytically, so cross-check the
  // eigensolver against that factorization on small instances.
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 8;
    const auto inst = moran::random_instance(n, 8800 + static_cast<unsigned>(trial));
    const auto w = moran::normalize_global(moran::inverse_distance_contiguity(inst.dist));
    const auto z = moran::standardize(inst.table.column("x"), false);
    const Vector lag = w.w * z.z;
    Matrix outer = static_cast<double>(n) * lag * lag.transpose();
    outer = 0.5 * (outer + outer.transpose());
    const auto spec = moran::symmetric_eigenvalues(outer);
    CHECK(spec.eigenvalues(n - 1) ==
          doctest::Approx(n * lag.squaredNorm()).epsilon(1e-10));
    for (int i = 0; i < n - 1; ++i) {
      CHECK(std::abs(spec.eigenvalues(i)) <= 1e-9);
    }
    CHECK(outer.trace() == doctest::Approx(n * lag.squaredNorm()).epsilon(1e-12));
  }
}

TEST_CASE("compute_bounds rejects a zero-intercept fit") {
  const auto w = fixtures::three_city_weights();
  const auto z = fixtures::z_123();
  const auto without = moran::fit_without_intercept(w, z);
  CHECK_THROWS_AS(moran::compute_bounds(w, z, without), DomainError);
}
