#include "moran/random_instance.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace moran {

RandomInstance random_instance(int n, std::uint64_t seed) {
  if (n < 3) throw DomainError("random_instance: need n >= 3");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> attr(0.5, 10.5);

  std::vector<double> xs, ys;
  xs.reserve(static_cast<std::size_t>(n));
  ys.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(xs.size()) < n) {
    const double cx = unit(rng);
    const double cy = unit(rng);
    bool separated = true;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (std::hypot(cx - xs[k], cy - ys[k]) < 1e-3) {
        separated = false;
        break;
      }
    }
    if (separated) {
      xs.push_back(cx);
      ys.push_back(cy);
    }
  }

  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids.push_back("u" + std::to_string(i + 1));

  Matrix r = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = std::hypot(xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)],
                                  ys[static_cast<std::size_t>(i)] - ys[static_cast<std::size_t>(j)]);
      r(i, j) = d;
      r(j, i) = d;
    }
  }

  RandomInstance inst;
  inst.dist = DistanceMatrix::validated(ids, std::move(r), "random instance");
  inst.table.ids = std::move(ids);
  inst.table.column_names = {"x"};
  Vector x(n);
  for (int i = 0; i < n; ++i) x(i) = attr(rng);
  inst.table.columns = {std::move(x)};
  return inst;
}

}  // namespace moran
