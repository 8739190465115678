#pragma once

#include <doctest.h>

#include <algorithm>
#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

#include "knit/corpus.hpp"
#include "knit/graph.hpp"

namespace knit::test {

inline EdgeList edges_of(std::initializer_list<std::pair<int, int>> pairs) {
  EdgeList out;
  for (auto [u, v] : pairs) out.push_back({u, v});
  return out;
}

inline Graph graph_of(std::initializer_list<std::pair<int, int>> pairs) { return Graph::build(edges_of(pairs)); }

inline EdgeList clique_edges(int first, int size) {
  EdgeList out;
  for (int a = first; a < first + size; ++a) {
    for (int b = a + 1; b < first + size; ++b) out.push_back({a, b});
  }
  return out;
}

inline EdgeList random_edges(std::size_t n, Ratio p, std::uint64_t seed) {
  return generate({ErdosRenyi{n, p}, seed});
}

/// Compares every incremental counter of g against a from-scratch
/// recount of its current edge set.
inline void expect_matches_oracle(const Graph& g) {
  const EdgeList edges = g.edges();
  const OracleCensus oracle = oracle_census(edges);
  const auto census = g.census();
  CHECK(census.triangles == oracle.triangles);
  CHECK(census.wedges == oracle.wedges);
  CHECK(census.triangle_density() == oracle.triangle_density);
  for (const Edge& e : edges) {
    const auto u = static_cast<VertexId>(e.u);
    const auto v = static_cast<VertexId>(e.v);
    CHECK(g.triangles_on_edge(u, v) == oracle.edge_triangles.at({u, v}));
    CHECK(g.jaccard(u, v) == oracle.edge_jaccard.at({u, v}));
  }
  CHECK_NOTHROW(g.check_invariants());
}

/// Triangles with all three corners in `set`, by a triple loop over the
/// raw edge list.
inline std::uint64_t brute_internal_triangles(const EdgeList& edges, const std::vector<VertexId>& set) {
  std::set<std::pair<std::int64_t, std::int64_t>> has;
  for (const Edge& e : edges) has.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  auto adj = [&](std::int64_t a, std::int64_t b) { return has.count({std::min(a, b), std::max(a, b)}) > 0; };
  std::uint64_t t = 0;
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (!adj(set[a], set[b])) continue;
      for (std::size_t c = b + 1; c < set.size(); ++c) {
        if (adj(set[a], set[c]) && adj(set[b], set[c])) ++t;
      }
    }
  }
  return t;
}

inline std::vector<VertexId> id_range(VertexId first, VertexId last) {
  std::vector<VertexId> out;
  for (VertexId v = first; v < last; ++v) out.push_back(v);
  return out;
}

}  // namespace knit::test
