#include "moran/table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unordered_set>

#include "moran/csv.hpp"

namespace moran {

bool AttributeTable::has_column(const std::string& name) const {
  return std::find(column_names.begin(), column_names.end(), name) != column_names.end();
}

const Vector& AttributeTable::column(const std::string& name) const {
  for (std::size_t k = 0; k < column_names.size(); ++k) {
    if (column_names[k] == name) return columns[k];
  }
  throw DomainError("no column named '" + name + "' in attribute table");
}

AttributeTable load_attribute_table(const std::string& path, char delimiter) {
  csv::Table raw = csv::read(path, delimiter);
  if (raw.header.size() < 2) {
    throw LoadError(path + ": header must have an id column and at least one value column");
  }
  AttributeTable table;
  table.column_names.assign(raw.header.begin() + 1, raw.header.end());
  const std::size_t ncols = table.column_names.size();
  const std::size_t nrows = raw.rows.size();
  table.columns.assign(ncols, Vector(nrows));

  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < nrows; ++i) {
    const auto& row = raw.rows[i];
    const std::string line = std::to_string(i + 2);  // 1-based, after header
    if (row[0].empty()) {
      throw LoadError(path + ":" + line + ": empty id");
    }
    if (!seen.insert(row[0]).second) {
      throw LoadError(path + ":" + line + ": duplicate id '" + row[0] + "'");
    }
    table.ids.push_back(row[0]);
    for (std::size_t c = 0; c < ncols; ++c) {
      table.columns[c](static_cast<Eigen::Index>(i)) = csv::parse_double(
          row[c + 1], path + ":" + line + ": column '" + table.column_names[c] + "'");
    }
  }
  return table;
}

DistanceMatrix DistanceMatrix::validated(std::vector<std::string> ids, Matrix r,
                                         const std::string& context) {
  const Eigen::Index n = r.rows();
  if (r.cols() != n) {
    throw LoadError(context + ": matrix is not square (" + std::to_string(r.rows()) +
                    "x" + std::to_string(r.cols()) + ")");
  }
  if (static_cast<Eigen::Index>(ids.size()) != n) {
    throw LoadError(context + ": " + std::to_string(ids.size()) + " ids for " +
                    std::to_string(n) + " rows");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (r(i, i) != 0.0) {
      throw LoadError(context + ": diagonal entry (" + std::to_string(i + 1) + "," +
                      std::to_string(i + 1) + ") must be 0, got " +
                      csv::format_exact(r(i, i)));
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (r(i, j) != r(j, i)) {
        throw LoadError(context + ": asymmetry at (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + "): " + csv::format_exact(r(i, j)) +
                        " vs " + csv::format_exact(r(j, i)));
      }
      if (!(r(i, j) > 0.0) || !std::isfinite(r(i, j))) {
        throw LoadError(context + ": off-diagonal entry (" + std::to_string(i + 1) +
                        "," + std::to_string(j + 1) + ") must be strictly positive, got " +
                        csv::format_exact(r(i, j)));
      }
    }
  }
  DistanceMatrix d;
  d.ids = std::move(ids);
  d.r = std::move(r);
  return d;
}

DistanceMatrix load_distance_matrix(const std::string& path, char delimiter) {
  csv::Table raw = csv::read(path, delimiter);
  const std::size_t n = raw.header.size() - 1;
  if (n == 0) {
    throw LoadError(path + ": header must list the unit ids after the id column");
  }
  if (raw.rows.size() != n) {
    throw LoadError(path + ": not square: header names " + std::to_string(n) +
                    " units but file has " + std::to_string(raw.rows.size()) + " rows");
  }
  std::vector<std::string> ids(raw.header.begin() + 1, raw.header.end());
  Matrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = raw.rows[i];
    const std::string line = std::to_string(i + 2);
    if (row[0] != ids[i]) {
      throw LoadError(path + ":" + line + ": row id '" + row[0] +
                      "' does not match header id '" + ids[i] + "'");
    }
    for (std::size_t j = 0; j < n; ++j) {
      r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          csv::parse_double(row[j + 1], path + ":" + line + ": column '" + ids[j] + "'");
    }
  }
  return DistanceMatrix::validated(std::move(ids), std::move(r), path);
}

StandardizedVector standardize(const Vector& values, bool log_transform,
                               const std::string& source_column) {
  const Eigen::Index n = values.size();
  if (n < 3) {
    throw DomainError("standardize: need at least 3 values, got " + std::to_string(n));
  }
  Vector y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = values(i);
    if (!std::isfinite(x)) {
      throw DomainError("standardize: value " + std::to_string(i + 1) + " is not finite");
    }
    if (log_transform) {
      if (!(x > 0.0)) {
        throw DomainError("standardize: log transform needs strictly positive values, value " +
                          std::to_string(i + 1) + " is " + csv::format_exact(x));
      }
      y(i) = std::log(x);
    } else {
      y(i) = x;
    }
  }
  const double mean = y.mean();
  const double var = (y.array() - mean).square().sum() / static_cast<double>(n);
  if (!(var > 0.0)) {
    throw DomainError("standardize: constant input (population variance is 0)");
  }
  const double sd = std::sqrt(var);

  StandardizedVector sv;
  sv.z = (y.array() - mean) / sd;
  sv.n = n;
  sv.source_column = source_column;
  sv.log_applied = log_transform;

  const double slack = tol().standardize_per_n * static_cast<double>(n);
  if (std::abs(sv.z.sum()) > slack || std::abs(sv.z.squaredNorm() - static_cast<double>(n)) > slack) {
    throw NumericError("standardize: z-score invariants violated beyond tolerance");
  }
  return sv;
}

void write_attribute_table(const AttributeTable& table, const std::string& path,
                           char delimiter) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LoadError(path + ": cannot open for writing");
  out << "id";
  for (const auto& name : table.column_names) out << delimiter << name;
  out << "\n";
  for (std::size_t i = 0; i < table.ids.size(); ++i) {
    out << table.ids[i];
    for (const auto& col : table.columns) {
      out << delimiter << csv::format_exact(col(static_cast<Eigen::Index>(i)));
    }
    out << "\n";
  }
}

void write_distance_matrix(const DistanceMatrix& d, const std::string& path,
                           char delimiter) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LoadError(path + ": cannot open for writing");
  out << "id";
  for (const auto& id : d.ids) out << delimiter << id;
  out << "\n";
  for (Eigen::Index i = 0; i < d.n(); ++i) {
    out << d.ids[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < d.n(); ++j) {
      out << delimiter << csv::format_exact(d.r(i, j));
    }
    out << "\n";
  }
}

}  // namespace moran
