#include "moran/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace moran {

namespace {

double offdiag_frobenius(const Matrix& a) {
  double acc = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i != j) acc += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(acc);
}

}  // namespace

EigenDecomposition symmetric_eigenvalues(const Matrix& m, bool with_vectors) {
  if (m.rows() != m.cols()) {
    throw DimensionError("symmetric_eigenvalues: matrix is not square");
  }
  const Eigen::Index n = m.rows();
  if (n == 0) throw DimensionError("symmetric_eigenvalues: empty matrix");
  if (n > 10000) {
    throw DomainError("symmetric_eigenvalues: matrix larger than the 10000x10000 guard");
  }
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol().symmetry_abs) {
    throw DomainError("symmetric_eigenvalues: input asymmetric beyond 1e-12");
  }

  Matrix a = 0.5 * (m + m.transpose());  // exact symmetry for the rotations
  Matrix q;
  if (with_vectors) q = Matrix::Identity(n, n);

  const double frob = a.norm();
  const double threshold = tol().jacobi_offdiag * frob;

  EigenDecomposition out;
  double off = offdiag_frobenius(a);
  while (off > threshold) {
    if (out.sweeps >= tol().jacobi_max_sweeps) {
      throw NumericError("symmetric_eigenvalues: no convergence within the sweep cap");
    }
    ++out.sweeps;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index qcol = p + 1; qcol < n; ++qcol) {
        const double apq = a(p, qcol);
        if (apq == 0.0) continue;
        const double tau = (a(qcol, qcol) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // A <- J' A J with J the rotation in the (p, qcol) plane.
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, qcol);
          a(k, p) = c * akp - s * akq;
          a(k, qcol) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(qcol, k);
          a(p, k) = c * apk - s * aqk;
          a(qcol, k) = s * apk + c * aqk;
        }
        a(p, qcol) = 0.0;
        a(qcol, p) = 0.0;
        if (with_vectors) {
          for (Eigen::Index k = 0; k < n; ++k) {
            const double qkp = q(k, p);
            const double qkq = q(k, qcol);
            q(k, p) = c * qkp - s * qkq;
            q(k, qcol) = s * qkp + c * qkq;
          }
        }
      }
    }
    off = offdiag_frobenius(a);
  }
  out.max_offdiag_residual = off;

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });
  out.eigenvalues.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) out.eigenvalues(i) = a(order[i], order[i]);
  if (with_vectors) {
    out.eigenvectors.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) out.eigenvectors.col(i) = q.col(order[i]);
  }
  return out;
}

double rayleigh_quotient(const Matrix& m, const Vector& v) {
  if (m.rows() != m.cols() || m.rows() != v.size()) {
    throw DimensionError("rayleigh_quotient: incompatible sizes");
  }
  const double vv = v.squaredNorm();
  if (vv == 0.0) throw DomainError("rayleigh_quotient: zero vector");
  return v.dot(m * v) / vv;
}

BoundsReport compute_bounds(const WeightMatrix& w, const StandardizedVector& z,
                            const ModelFit& fit) {
  if (z.z.size() != w.n) {
    throw DimensionError("compute_bounds: weight matrix and vector sizes differ");
  }
  if (!fit.with_intercept) {
    throw DomainError("compute_bounds: fit must be the with-intercept model");
  }
  const double n = static_cast<double>(w.n);
  const Matrix nw = n * w.w;
  const Vector lag = w.w * z.z;
  const double index = z.z.dot(lag);
  const double lag_sum = lag.sum();
  const double lag_power = n * lag.squaredNorm();  // n (Wz)'Wz

  BoundsReport rep;
  rep.index = index;

  const EigenDecomposition spec1 = symmetric_eigenvalues(nw);
  rep.set1 = {spec1.eigenvalues(0), spec1.eigenvalues(w.n - 1)};

  Matrix gram = nw.transpose() * nw;
  gram = 0.5 * (gram + gram.transpose());
  const EigenDecomposition spec2 = symmetric_eigenvalues(gram);
  // Tiny negative eigenvalues of the Gram matrix are roundoff; clamp so the
  // reported interval respects positive semidefiniteness.
  rep.set2 = {std::max(spec2.eigenvalues(0), 0.0), spec2.eigenvalues(w.n - 1)};

  // W symmetric makes the Gram spectrum the squared spectrum of nW.
  Vector squared = spec1.eigenvalues.array().square();
  std::sort(squared.data(), squared.data() + squared.size());
  rep.set2_crosscheck_max_diff = (squared - spec2.eigenvalues).cwiseAbs().maxCoeff();

  rep.set3 = {0.0, lag_power};

  rep.set2_quantity = index * index + lag_sum * lag_sum + fit.sigma_e2;
  rep.set2_theoretical_quantity = index * index + lag_sum * lag_sum;
  rep.set3_quantity = index * index;

  const double slack = tol().bounds_slack;
  rep.set1_satisfied = rep.set1[0] - slack <= index && index <= rep.set1[1] + slack;
  rep.set2_satisfied = rep.set2[0] - slack <= rep.set2_quantity &&
                       rep.set2_quantity <= rep.set2[1] + slack;
  rep.set3_satisfied = rep.set3_quantity <= rep.set3[1] + slack;

  double u = std::min(rep.set2[1] - lag_sum * lag_sum - fit.sigma_e2, lag_power);
  if (u < 0) u = 0;  // quadratic constraints admit no I at all; degenerate
  const double root = std::sqrt(u);
  rep.intersection_for_I = {std::max(rep.set1[0], -root), std::min(rep.set1[1], root)};

  rep.attain_lower = index - rep.set1[0];
  rep.attain_upper = rep.set1[1] - index;
  return rep;
}

}  // namespace moran
