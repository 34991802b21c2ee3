#include "moran/weights.hpp"

#include <cmath>
#include <sstream>

#include "moran/csv.hpp"

namespace moran {

namespace {

void check_square_symmetric_nonneg(const Matrix& m, const char* what) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) {
    throw DimensionError(std::string(what) + ": matrix is not square");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (m(i, i) != 0.0) {
      throw DomainError(std::string(what) + ": nonzero diagonal at (" +
                        std::to_string(i + 1) + "," + std::to_string(i + 1) + ")");
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (m(i, j) != m(j, i)) {
        throw DomainError(std::string(what) + ": asymmetry at (" + std::to_string(i + 1) +
                          "," + std::to_string(j + 1) + ")");
      }
      if (!(m(i, j) >= 0.0) || !std::isfinite(m(i, j))) {
        throw DomainError(std::string(what) + ": negative or non-finite entry at (" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
}

}  // namespace

ContiguityMatrix ContiguityMatrix::validated(Matrix v) {
  check_square_symmetric_nonneg(v, "contiguity matrix");
  ContiguityMatrix c;
  c.v0 = v.sum();
  if (!(c.v0 > 0.0)) {
    throw DomainError("contiguity matrix: all entries are zero, cannot normalize");
  }
  c.v = std::move(v);
  return c;
}

WeightMatrix WeightMatrix::validated(Matrix w) {
  check_square_symmetric_nonneg(w, "weight matrix");
  const double sum = w.sum();
  if (std::abs(sum - 1.0) > tol().weight_sum) {
    throw DomainError("weight matrix: entries sum to " + csv::format_exact(sum) +
                      ", expected 1 within " + csv::format_exact(tol().weight_sum));
  }
  WeightMatrix out;
  out.n = w.rows();
  out.w = std::move(w);
  return out;
}

ContiguityMatrix inverse_distance_contiguity(const DistanceMatrix& d) {
  const Eigen::Index n = d.n();
  Matrix v = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      v(i, j) = 1.0 / d.r(i, j);
      v(j, i) = v(i, j);  // reciprocal of the same stored value keeps exact symmetry
    }
  }
  return ContiguityMatrix::validated(std::move(v));
}

WeightMatrix normalize_global(const ContiguityMatrix& v) {
  if (!(v.v0 > 0.0)) {
    throw DomainError("normalize_global: grand sum must be positive");
  }
  return WeightMatrix::validated(v.v / v.v0);
}

Vector spatial_lag(const WeightMatrix& w, const StandardizedVector& z) {
  if (z.z.size() != w.n) {
    throw DimensionError("spatial_lag: weight matrix is " + std::to_string(w.n) + "x" +
                         std::to_string(w.n) + " but vector has " +
                         std::to_string(z.z.size()) + " entries");
  }
  return w.w * z.z;
}

void write_weight_matrix(const WeightMatrix& w, const std::vector<std::string>& ids,
                         const std::string& path, char delimiter) {
  if (static_cast<Eigen::Index>(ids.size()) != w.n) {
    throw DimensionError("write_weight_matrix: " + std::to_string(ids.size()) +
                         " ids for " + std::to_string(w.n) + " rows");
  }
  std::ostringstream out;
  out << "id";
  for (const auto& id : ids) out << delimiter << id;
  out << "\n";
  for (Eigen::Index i = 0; i < w.n; ++i) {
    out << ids[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < w.n; ++j) {
      out << delimiter << csv::format_exact(w.w(i, j));
    }
    out << "\n";
  }
  csv::write_file_atomic(path, out.str());
}

}  // namespace moran
