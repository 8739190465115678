#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "knit/ratio.hpp"

namespace knit {

using VertexId = std::uint32_t;

/// One line of an edge list. Ids are signed so that negative input can be
/// rejected at build time instead of silently wrapping.
struct Edge {
  std::int64_t u = 0;
  std::int64_t v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

struct TriangleWedgeCensus {
  std::uint64_t triangles = 0;
  std::uint64_t wedges = 0;

  /// 3t / w, or 0 when there are no wedges.
  Ratio triangle_density() const;
};

/// Mutable undirected simple graph with incremental bookkeeping:
///   - sorted neighbor lists, so every scan is in ascending id order;
///   - degree buckets and the current maximum degree;
///   - t_e = |N(i) ∩ N(j)| for every present edge, updated on deletion.
///
/// Vertex ids are dense in [0, id_bound()). A deleted vertex is gone for
/// good; ids are never reused.
///
/// Every elementary structure access is charged to an operation counter so
/// that total work can be measured independently of wall clock.
class Graph {
 public:
  Graph() = default;

  /// Self-loops and duplicate edges are dropped. The graph has vertices
  /// [0, max(min_vertices, max_id + 1)); ids that appear only in self-loops
  /// or not at all become isolated vertices.
  static Graph build(std::span<const Edge> edges, std::size_t min_vertices = 0);

  std::size_t id_bound() const { return adjacency_.size(); }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_count_; }

  bool has_vertex(VertexId v) const { return v < present_.size() && present_[v]; }
  bool has_edge(VertexId u, VertexId v) const;

  std::size_t degree(VertexId v) const;
  std::span<const VertexId> neighbors(VertexId v) const;

  /// Present vertices in ascending order.
  std::vector<VertexId> vertices() const;
  /// Present edges as (u, v) with u < v, ascending.
  EdgeList edges() const;

  std::size_t max_degree() const { return max_degree_; }
  /// Lowest-id vertex of maximum degree. Requires at least one edge.
  VertexId max_degree_vertex() const;

  /// Number of triangles through edge (u, v).
  std::uint32_t triangles_on_edge(VertexId u, VertexId v) const;

  /// |N(u) ∩ N(v)| / |N(u) ∪ N(v) \ {u, v}|, with 0/0 read as 0.
  Ratio jaccard(VertexId u, VertexId v) const;
  /// jaccard(u, v) < epsilon, decided by cross-multiplication.
  bool jaccard_below(VertexId u, VertexId v, const Ratio& epsilon) const;

  /// Sorted common neighborhood; scans the smaller list and probes the larger.
  std::vector<VertexId> common_neighbors(VertexId u, VertexId v) const;

  TriangleWedgeCensus census() const;

  void delete_edge(VertexId u, VertexId v);
  void delete_vertex(VertexId v);

  /// Elementary operations performed so far (build, queries, mutation).
  std::uint64_t operation_count() const { return ops_; }
  void charge(std::uint64_t n) const { ops_ += n; }

  /// Queries made while one of these is alive are not charged; used for
  /// reporting work that is not part of the algorithm being measured.
  class UnchargedScope {
   public:
    explicit UnchargedScope(const Graph& g) : graph_(g), saved_(g.ops_) {}
    ~UnchargedScope() { graph_.ops_ = saved_; }
    UnchargedScope(const UnchargedScope&) = delete;
    UnchargedScope& operator=(const UnchargedScope&) = delete;

   private:
    const Graph& graph_;
    std::uint64_t saved_;
  };

  /// Recomputes every derived structure from the neighbor lists and throws
  /// ContractViolation on the first mismatch. O(|E| * d_max).
  void check_invariants() const;

 private:
  static std::uint64_t edge_key(VertexId u, VertexId v);
  void require_vertex(VertexId v) const;
  void require_edge(VertexId u, VertexId v) const;
  void move_bucket(VertexId v, std::size_t from, std::size_t to);
  void erase_neighbor(VertexId v, VertexId gone);

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<char> present_;
  std::vector<std::set<VertexId>> buckets_;
  std::unordered_map<std::uint64_t, std::uint32_t> edge_triangles_;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
  std::size_t max_degree_ = 0;
  mutable std::uint64_t ops_ = 0;
};

/// Binomial coefficient C(d, 2).
constexpr std::uint64_t choose2(std::uint64_t d) { return d < 2 ? 0 : d * (d - 1) / 2; }

}  // namespace knit
