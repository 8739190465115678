#pragma once

#include <cstdint>
#include <vector>

namespace knit {

struct Assignment {
  std::int64_t cost = 0;
  /// row r is assigned column columns[r].
  std::vector<std::size_t> columns;
};

/// Minimum-cost perfect matching on a square cost matrix, returning the
/// lexicographically smallest optimal permutation. Enumerates permutations
/// for n <= 10; above that runs the Hungarian method and fixes rows one at
/// a time to the smallest column that keeps the optimum.
Assignment min_cost_assignment(const std::vector<std::vector<std::int64_t>>& cost);

/// Hungarian method alone (O(n^3)); ties broken arbitrarily.
Assignment hungarian(const std::vector<std::vector<std::int64_t>>& cost);

}  // namespace knit
