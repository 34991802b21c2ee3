// Ingestion and standardization: attribute tables, distance matrices and
// z-scored vectors.
//
// Attribute CSV:  header `id,<col1>,<col2>,...`, one row per unit.
// Distance CSV:   header `id,<id1>,...,<idn>`, then n rows `idk,r_k1,...,r_kn`.
//
// A distance matrix must be exactly symmetric as loaded, have an exactly zero
// diagonal and strictly positive off-diagonal entries (a zero distance between
// distinct units would make its reciprocal weight infinite and is rejected).

#pragma once

#include <string>
#include <vector>

#include "moran/common.hpp"

namespace moran {

struct AttributeTable {
  std::vector<std::string> ids;
  std::vector<std::string> column_names;  // excludes the leading id column
  std::vector<Vector> columns;            // aligned with column_names

  Eigen::Index n() const { return static_cast<Eigen::Index>(ids.size()); }
  bool has_column(const std::string& name) const;
  const Vector& column(const std::string& name) const;  // throws DomainError
};

struct DistanceMatrix {
  std::vector<std::string> ids;
  Matrix r;

  Eigen::Index n() const { return r.rows(); }

  // Validates all invariants; `context` is prepended to error messages.
  static DistanceMatrix validated(std::vector<std::string> ids, Matrix r,
                                  const std::string& context = "distance matrix");
};

struct StandardizedVector {
  Vector z;
  Eigen::Index n = 0;
  std::string source_column;
  bool log_applied = false;
};

AttributeTable load_attribute_table(const std::string& path, char delimiter = ',');
DistanceMatrix load_distance_matrix(const std::string& path, char delimiter = ',');

// z_i = (y_i - mean(y)) / sd_pop(y), with y = ln(x) when log_transform is set.
// Population (divide-by-n) standard deviation, so sum(z) = 0 and z'z = n.
// Requires n >= 3, finite values, strictly positive values under log, and a
// non-constant input.
StandardizedVector standardize(const Vector& values, bool log_transform,
                               const std::string& source_column = "");

// Round-trip writers (exact shortest representation per value).
void write_attribute_table(const AttributeTable& table, const std::string& path,
                           char delimiter = ',');
void write_distance_matrix(const DistanceMatrix& d, const std::string& path,
                           char delimiter = ',');

}  // namespace moran
