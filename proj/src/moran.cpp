#include "moran/moran.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "moran/bounds.hpp"

namespace moran {

MoranResult moran_index(const WeightMatrix& w, const StandardizedVector& z) {
  if (z.z.size() != w.n) {
    throw DimensionError("moran_index: weight matrix and vector sizes differ");
  }
  MoranResult res;
  res.n = w.n;
  res.lag = w.w * z.z;
  res.index = z.z.dot(res.lag);
  res.lag_sum = res.lag.sum();
  res.lag_norm2 = res.lag.squaredNorm();
  if (res.index * res.index >
      static_cast<double>(res.n) * res.lag_norm2 + tol().recompute) {
    throw NumericError("moran_index: I^2 exceeds n(Wz)'Wz, inputs are corrupt");
  }
  return res;
}

OuterProductCheck outer_product_check(const WeightMatrix& w, const StandardizedVector& z,
                                      Eigen::Index eigen_n_cap) {
  const MoranResult res = moran_index(w, z);
  OuterProductCheck check;

  // z (z'Wz) - I z is zero by the definition of I; the residual measures
  // only floating-point noise in the two evaluation orders.
  const Vector lhs = z.z * (z.z.dot(res.lag));
  check.residual = (lhs - res.index * z.z).cwiseAbs().maxCoeff();

  // trace(z z'W) = z'Wz by the cyclic property; evaluated from the explicit
  // triple product, not the shortcut.
  const Matrix outer = z.z * z.z.transpose();
  const Matrix m = outer * w.w;
  check.trace_residual = std::abs(m.trace() - res.index);

  if (w.n <= eigen_n_cap) {
    // m = (z z') W is similar in spectrum to W (z z'), and both share the
    // nonzero spectrum of (z z') W (z z') / (z'z), which is symmetric.
    Matrix sym = outer * w.w * outer / z.z.squaredNorm();
    sym = 0.5 * (sym + sym.transpose());
    const EigenDecomposition spec = symmetric_eigenvalues(sym);
    double best = std::numeric_limits<double>::infinity();
    Eigen::Index best_i = 0;
    for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
      const double d = std::abs(spec.eigenvalues(i) - res.index);
      if (d < best) {
        best = d;
        best_i = i;
      }
    }
    check.eigen_offset = best;
    double spurious = 0;
    for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
      if (i != best_i) spurious = std::max(spurious, std::abs(spec.eigenvalues(i)));
    }
    check.eigen_spurious = spurious;
    check.eigen_checked = true;
  }
  return check;
}

GetisOrdResult getis_ord_index(const WeightMatrix& w, const Vector& x) {
  if (x.size() != w.n) {
    throw DimensionError("getis_ord_index: weight matrix and vector sizes differ");
  }
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!(x(i) > 0.0)) {
      throw DomainError("getis_ord_index: values must be strictly positive");
    }
  }
  GetisOrdResult res;
  res.p = x / x.norm();
  res.zeta = res.p.squaredNorm();
  const Vector wp = w.w * res.p;
  res.index = res.p.dot(wp);
  res.identity_residual =
      (res.p * (res.p.dot(wp)) - res.index * res.p).cwiseAbs().maxCoeff();
  return res;
}

}  // namespace moran
