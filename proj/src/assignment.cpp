#include "knit/assignment.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "knit/errors.hpp"

namespace knit {
namespace {

void require_square(const std::vector<std::vector<std::int64_t>>& cost) {
  for (const auto& row : cost) {
    if (row.size() != cost.size()) throw InputError("assignment cost matrix must be square");
  }
}

Assignment brute_force(const std::vector<std::vector<std::int64_t>>& cost) {
  const std::size_t n = cost.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Assignment best;
  best.cost = std::numeric_limits<std::int64_t>::max();
  do {
    std::int64_t total = 0;
    for (std::size_t r = 0; r < n; ++r) total += cost[r][perm[r]];
    // Permutations arrive in lexicographic order; keep the first optimum.
    if (total < best.cost) best = {total, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

Assignment hungarian(const std::vector<std::vector<std::int64_t>>& cost) {
  require_square(cost);
  const std::size_t n = cost.size();
  if (n == 0) return {};
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  // 1-based potentials; column 0 is the virtual start.
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t row = 1; row <= n; ++row) {
    match[0] = row;
    std::size_t col0 = 0;
    std::vector<std::int64_t> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[col0] = 1;
      const std::size_t r0 = match[col0];
      std::int64_t delta = inf;
      std::size_t col1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = cost[r0 - 1][j - 1] - u[r0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = col0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          col1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  Assignment out;
  out.columns.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) out.columns[match[j] - 1] = j - 1;
  for (std::size_t r = 0; r < n; ++r) out.cost += cost[r][out.columns[r]];
  return out;
}

Assignment min_cost_assignment(const std::vector<std::vector<std::int64_t>>& cost) {
  require_square(cost);
  const std::size_t n = cost.size();
  if (n <= 10) return brute_force(cost);

  const std::int64_t optimum = hungarian(cost).cost;
  Assignment out;
  out.cost = optimum;
  std::vector<std::size_t> free_rows(n), free_cols(n);
  std::iota(free_rows.begin(), free_rows.end(), 0);
  std::iota(free_cols.begin(), free_cols.end(), 0);
  std::int64_t fixed_cost = 0;
  for (std::size_t r = 0; r < n; ++r) {
    // Rows are fixed in order, so row r is always free_rows.front().
    free_rows.erase(free_rows.begin());
    for (std::size_t ci = 0; ci < free_cols.size(); ++ci) {
      const std::size_t c = free_cols[ci];
      std::vector<std::size_t> rest_cols = free_cols;
      rest_cols.erase(rest_cols.begin() + static_cast<std::ptrdiff_t>(ci));
      std::vector<std::vector<std::int64_t>> sub(free_rows.size(), std::vector<std::int64_t>(rest_cols.size()));
      for (std::size_t i = 0; i < free_rows.size(); ++i) {
        for (std::size_t j = 0; j < rest_cols.size(); ++j) sub[i][j] = cost[free_rows[i]][rest_cols[j]];
      }
      if (fixed_cost + cost[r][c] + hungarian(sub).cost == optimum) {
        out.columns.push_back(c);
        fixed_cost += cost[r][c];
        free_cols = std::move(rest_cols);
        break;
      }
    }
  }
  return out;
}

}  // namespace knit
