// Seeded synthetic instances for self-checks and property tests: n random
// points on the unit square (pairwise separation at least 1e-3, so the
// reciprocal distances stay finite and well scaled) and one positive
// attribute column "x" drawn uniformly from [0.5, 10.5].

#pragma once

#include <cstdint>

#include "moran/table.hpp"

namespace moran {

struct RandomInstance {
  AttributeTable table;  // ids u1..un, single column "x"
  DistanceMatrix dist;   // Euclidean distances of the generated points
};

RandomInstance random_instance(int n, std::uint64_t seed);

}  // namespace moran
