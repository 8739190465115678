#include "knit/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "knit/errors.hpp"

namespace knit {

Ratio TriangleWedgeCensus::triangle_density() const {
  if (wedges == 0) return Ratio(0);
  return Ratio(static_cast<std::int64_t>(3 * triangles), static_cast<std::int64_t>(wedges));
}

std::uint64_t Graph::edge_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

Graph Graph::build(std::span<const Edge> edges, std::size_t min_vertices) {
  constexpr std::int64_t max_id = std::numeric_limits<VertexId>::max() - 1;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(edges.size());
  std::size_t n = min_vertices;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0) {
      throw InputError("negative vertex id in edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
    if (e.u > max_id || e.v > max_id) {
      throw InputError("vertex id out of range in edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
    n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(e.u, e.v)) + 1);
    if (e.u == e.v) continue;
    const auto a = static_cast<VertexId>(std::min(e.u, e.v));
    const auto b = static_cast<VertexId>(std::max(e.u, e.v));
    pairs.emplace_back(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  Graph g;
  g.adjacency_.resize(n);
  g.present_.assign(n, 1);
  g.vertex_count_ = n;
  g.edge_count_ = pairs.size();
  // Sorted by (a, b): each list receives its entries in ascending order.
  for (const auto& [a, b] : pairs) {
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  g.ops_ += n + 2 * pairs.size();

  for (const auto& list : g.adjacency_) g.max_degree_ = std::max(g.max_degree_, list.size());
  g.buckets_.resize(g.max_degree_ + 1);
  for (VertexId v = 0; v < n; ++v) g.buckets_[g.adjacency_[v].size()].insert(v);
  g.ops_ += n;

  g.edge_triangles_.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    const auto common = g.common_neighbors(a, b);
    g.edge_triangles_.emplace(edge_key(a, b), static_cast<std::uint32_t>(common.size()));
    ++g.ops_;
  }
  return g;
}

void Graph::require_vertex(VertexId v) const {
  if (!has_vertex(v)) throw ContractViolation("vertex " + std::to_string(v) + " is not in the graph");
}

void Graph::require_edge(VertexId u, VertexId v) const {
  if (!has_edge(u, v)) {
    throw ContractViolation("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") is not in the graph");
  }
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u == v || !has_vertex(u) || !has_vertex(v)) return false;
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const VertexId other = &a == &adjacency_[u] ? v : u;
  ++ops_;
  return std::binary_search(a.begin(), a.end(), other);
}

std::size_t Graph::degree(VertexId v) const {
  require_vertex(v);
  return adjacency_[v].size();
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  require_vertex(v);
  return adjacency_[v];
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vertex_count_);
  for (VertexId v = 0; v < present_.size(); ++v) {
    if (present_[v]) out.push_back(v);
  }
  return out;
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

VertexId Graph::max_degree_vertex() const {
  if (edge_count_ == 0) throw ContractViolation("max_degree_vertex on a graph without edges");
  ++ops_;
  return *buckets_[max_degree_].begin();
}

std::uint32_t Graph::triangles_on_edge(VertexId u, VertexId v) const {
  require_edge(u, v);
  ++ops_;
  return edge_triangles_.at(edge_key(u, v));
}

Ratio Graph::jaccard(VertexId u, VertexId v) const {
  const std::int64_t t = triangles_on_edge(u, v);
  const std::int64_t denom =
      static_cast<std::int64_t>(adjacency_[u].size() + adjacency_[v].size()) - 2 - t;
  if (denom == 0) return Ratio(0);
  return Ratio(t, denom);
}

bool Graph::jaccard_below(VertexId u, VertexId v, const Ratio& epsilon) const {
  const std::int64_t t = triangles_on_edge(u, v);
  const std::int64_t denom =
      static_cast<std::int64_t>(adjacency_[u].size() + adjacency_[v].size()) - 2 - t;
  if (denom == 0) return epsilon.num() > 0;
  return static_cast<__int128>(t) * epsilon.den() < static_cast<__int128>(epsilon.num()) * denom;
}

std::vector<VertexId> Graph::common_neighbors(VertexId u, VertexId v) const {
  require_vertex(u);
  require_vertex(v);
  const auto& small = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const auto& large = &small == &adjacency_[u] ? adjacency_[v] : adjacency_[u];
  std::vector<VertexId> out;
  for (VertexId k : small) {
    if (std::binary_search(large.begin(), large.end(), k)) out.push_back(k);
  }
  ops_ += small.size() + 1;
  return out;
}

TriangleWedgeCensus Graph::census() const {
  TriangleWedgeCensus c;
  std::uint64_t edge_sum = 0;
  for (const auto& [key, t] : edge_triangles_) edge_sum += t;
  for (VertexId v = 0; v < adjacency_.size(); ++v) c.wedges += choose2(adjacency_[v].size());
  c.triangles = edge_sum / 3;
  ops_ += edge_triangles_.size() + adjacency_.size();
  return c;
}

void Graph::move_bucket(VertexId v, std::size_t from, std::size_t to) {
  buckets_[from].erase(v);
  buckets_[to].insert(v);
  ops_ += 2;
}

void Graph::erase_neighbor(VertexId v, VertexId gone) {
  auto& list = adjacency_[v];
  const auto it = std::lower_bound(list.begin(), list.end(), gone);
  ops_ += static_cast<std::uint64_t>(list.end() - it);
  list.erase(it);
}

void Graph::delete_edge(VertexId u, VertexId v) {
  require_edge(u, v);
  for (VertexId k : common_neighbors(u, v)) {
    --edge_triangles_[edge_key(u, k)];
    --edge_triangles_[edge_key(v, k)];
    ops_ += 2;
  }
  edge_triangles_.erase(edge_key(u, v));

  const std::size_t du = adjacency_[u].size();
  const std::size_t dv = adjacency_[v].size();
  erase_neighbor(u, v);
  erase_neighbor(v, u);
  move_bucket(u, du, du - 1);
  move_bucket(v, dv, dv - 1);
  --edge_count_;

  while (max_degree_ > 0 && buckets_[max_degree_].empty()) {
    --max_degree_;
    ++ops_;
  }
}

void Graph::delete_vertex(VertexId v) {
  require_vertex(v);
  // Deleting from the back keeps each list erase O(1).
  while (!adjacency_[v].empty()) delete_edge(v, adjacency_[v].back());
  buckets_[0].erase(v);
  present_[v] = 0;
  --vertex_count_;
  ++ops_;
}

void Graph::check_invariants() const {
  auto fail = [](const std::string& what) { throw ContractViolation("graph invariant: " + what); };
  std::size_t edges = 0;
  std::size_t vertices = 0;
  std::size_t top = 0;
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    const auto& list = adjacency_[u];
    if (!present_[u]) {
      if (!list.empty()) fail("deleted vertex " + std::to_string(u) + " keeps neighbors");
      continue;
    }
    ++vertices;
    if (!std::is_sorted(list.begin(), list.end()) || std::adjacent_find(list.begin(), list.end()) != list.end()) {
      fail("neighbor list of " + std::to_string(u) + " not strictly ascending");
    }
    if (list.size() >= buckets_.size() || !buckets_[list.size()].contains(u)) {
      fail("vertex " + std::to_string(u) + " missing from its degree bucket");
    }
    top = std::max(top, list.size());
    for (VertexId w : list) {
      if (w == u) fail("self-loop at " + std::to_string(u));
      if (!has_vertex(w) || !std::binary_search(adjacency_[w].begin(), adjacency_[w].end(), u)) {
        fail("asymmetric edge (" + std::to_string(u) + ", " + std::to_string(w) + ")");
      }
      if (u < w) {
        ++edges;
        std::vector<VertexId> common;
        std::set_intersection(list.begin(), list.end(), adjacency_[w].begin(), adjacency_[w].end(),
                              std::back_inserter(common));
        const auto it = edge_triangles_.find(edge_key(u, w));
        if (it == edge_triangles_.end() || it->second != common.size()) {
          fail("stale triangle count on (" + std::to_string(u) + ", " + std::to_string(w) + ")");
        }
      }
    }
  }
  std::size_t bucketed = 0;
  for (const auto& b : buckets_) bucketed += b.size();
  if (bucketed != vertices) fail("degree buckets hold extra vertices");
  if (edges != edge_count_ || edges != edge_triangles_.size()) fail("edge count mismatch");
  if (vertices != vertex_count_) fail("vertex count mismatch");
  if (top != max_degree_) fail("stale maximum degree");
}

}  // namespace knit
