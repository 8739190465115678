#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "knit/graph.hpp"
#include "knit/ratio.hpp"

namespace knit {

/// Disjoint cliques, numbered consecutively in the given order.
struct UnionOfCliques {
  std::vector<std::size_t> sizes;
};

/// K_{n,n,n}; part a holds ids [a*n, (a+1)*n).
struct CompleteTripartite {
  std::size_t part_size = 0;
};

/// 3m/d cyclic blocks of d/3 vertices, each block joined completely to
/// itself and both neighbors. Block k holds ids [k*d/3, (k+1)*d/3), so
/// every vertex has degree d - 1.
struct Bracelet {
  std::size_t m = 0;
  std::size_t d = 0;
};

/// Clique on the first ceil(n^(1/3)) ids plus a random graph of the given
/// degree (configuration model, simplified) on the remaining ids.
struct CliquePlusSparse {
  std::size_t n = 0;
  std::size_t degree = 3;
};

/// Clique on m*m ids (A_k = [k*m, (k+1)*m)) plus B = [m*m, m*m + m) where
/// b_k = m*m + k is joined to all of A_k.
struct BlocksPlusB {
  std::size_t m = 0;
};

/// ceil(n/3) disjoint triangles {3i, 3i+1, 3i+2} overlaid with a random
/// graph of the given degree on the same vertices.
struct TrianglesPlusExpander {
  std::size_t n = 0;
  std::size_t degree = 3;
};

/// G(n, p) with an exact rational p.
struct ErdosRenyi {
  std::size_t n = 0;
  Ratio p;
};

using GeneratorParams = std::variant<UnionOfCliques, CompleteTripartite, Bracelet, CliquePlusSparse, BlocksPlusB,
                                     TrianglesPlusExpander, ErdosRenyi>;

struct GeneratorSpec {
  GeneratorParams params;
  std::uint64_t seed = 0;
};

std::string_view kind_name(const GeneratorSpec& spec);

/// Simple edge list with u < v, sorted. Same spec and seed give the same
/// list. Throws InputError on violated size constraints.
EdgeList generate(const GeneratorSpec& spec);

/// Number of vertex ids the generated graph spans (isolated ones included).
std::size_t vertex_count(const GeneratorSpec& spec);

/// Smallest c with c^3 >= n.
std::size_t ceil_cbrt(std::size_t n);

/// Brute-force counts computed from the raw edge list with an adjacency
/// matrix and a triple loop; shares nothing with Graph.
struct OracleCensus {
  std::uint64_t triangles = 0;
  std::uint64_t wedges = 0;
  std::map<std::pair<VertexId, VertexId>, std::uint64_t> edge_triangles;
  std::map<std::pair<VertexId, VertexId>, Ratio> edge_jaccard;
  Ratio triangle_density;
};

/// Intended for small graphs (a dense n x n matrix is allocated).
OracleCensus oracle_census(const EdgeList& edges);

}  // namespace knit
