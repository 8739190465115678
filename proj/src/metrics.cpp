#include "knit/metrics.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "knit/errors.hpp"

namespace knit {
namespace {

Ratio fraction(std::uint64_t part, std::uint64_t whole) {
  if (whole == 0) return Ratio(1);
  return Ratio(static_cast<std::int64_t>(part), static_cast<std::int64_t>(whole));
}

std::vector<char> membership(const Graph& g, std::span<const VertexId> set) {
  if (set.empty()) throw InputError("vertex set is empty");
  std::vector<char> in(g.id_bound(), 0);
  for (VertexId v : set) {
    if (!g.has_vertex(v)) throw InputError("vertex " + std::to_string(v) + " is not in the graph");
    if (in[v]) throw InputError("vertex " + std::to_string(v) + " listed twice");
    in[v] = 1;
  }
  return in;
}

// Eccentricity of `source` inside the induced subgraph, or nullopt if some
// member is unreachable.
std::optional<std::uint32_t> eccentricity(const Graph& g, const std::vector<char>& in, std::size_t size,
                                          VertexId source) {
  std::vector<std::uint32_t> dist(g.id_bound(), UINT32_MAX);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  std::size_t reached = 1;
  std::uint32_t far = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(v)) {
      if (!in[w] || dist[w] != UINT32_MAX) continue;
      dist[w] = dist[v] + 1;
      far = std::max(far, dist[w]);
      ++reached;
      queue.push_back(w);
    }
  }
  if (reached != size) return std::nullopt;
  return far;
}

}  // namespace

Ratio DensityProfile::mu_at(const Ratio& epsilon) const {
  const auto dense = std::count_if(edge_jaccard.begin(), edge_jaccard.end(),
                                   [&](const Ratio& j) { return j >= epsilon; });
  return fraction(static_cast<std::uint64_t>(dense), edge_jaccard.size());
}

bool DensityProfile::everywhere_dense_at(const Ratio& epsilon) const {
  return isolated_vertices == 0 && mu_at(epsilon) == Ratio(1);
}

Ratio DensityProfile::min_jaccard() const {
  if (edge_jaccard.empty()) return Ratio(0);
  return *std::min_element(edge_jaccard.begin(), edge_jaccard.end());
}

DensityProfile density_profile(const Graph& g) {
  DensityProfile p;
  p.census = g.census();
  p.triangle_density = p.census.triangle_density();
  p.vertices = g.vertex_count();
  p.edges = g.edge_count();
  p.edge_density = p.vertices < 2 ? Ratio(0)
                                  : Ratio(static_cast<std::int64_t>(p.edges),
                                          static_cast<std::int64_t>(choose2(p.vertices)));
  p.edge_jaccard.reserve(p.edges);
  for (VertexId v : g.vertices()) {
    const auto nbrs = g.neighbors(v);
    if (nbrs.empty()) ++p.isolated_vertices;
    for (VertexId w : nbrs) {
      if (v < w) p.edge_jaccard.push_back(g.jaccard(v, w));
    }
  }
  return p;
}

InducedStats induced_stats(const Graph& g, std::span<const VertexId> set) {
  const auto in = membership(g, set);
  InducedStats s;
  s.vertices = set.size();

  std::uint64_t degree_sum = 0;
  std::uint64_t incident_sum = 0;  // sum over v in S of triangles at v
  std::uint64_t inner_edge_t = 0;  // sum of t_e over edges inside S
  for (VertexId v : set) {
    std::uint64_t inner_degree = 0;
    std::uint64_t at_v = 0;
    const auto nbrs = g.neighbors(v);
    degree_sum += nbrs.size();
    for (VertexId w : nbrs) {
      const std::uint64_t t = g.triangles_on_edge(v, w);
      at_v += t;
      if (!in[w]) continue;
      ++inner_degree;
      if (v < w) {
        inner_edge_t += t;
        for (VertexId k : g.common_neighbors(v, w)) {
          if (k > w && in[k]) ++s.internal_triangles;
        }
      }
    }
    s.edges += inner_degree;
    s.wedges += choose2(inner_degree);
    incident_sum += at_v / 2;
  }
  s.edges /= 2;
  s.incident_edges = degree_sum - s.edges;
  // A triangle with c vertices in S contributes c to incident_sum and
  // C(c, 2) to inner_edge_t, so the difference counts c = 1, 2 once and
  // c = 3 zero times.
  s.incident_triangles = incident_sum - inner_edge_t + s.internal_triangles;

  s.edge_density = s.vertices < 2 ? Ratio(0)
                                  : Ratio(static_cast<std::int64_t>(s.edges),
                                          static_cast<std::int64_t>(choose2(s.vertices)));
  s.triangle_density = TriangleWedgeCensus{s.internal_triangles, s.wedges}.triangle_density();

  std::optional<std::uint32_t> best;
  for (VertexId v : set) {
    const auto ecc = eccentricity(g, in, set.size(), v);
    if (!ecc) {
      best.reset();
      break;
    }
    if (!best || *ecc < *best) best = ecc;
  }
  s.radius = best;
  return s;
}

FamilyCertificate certify_family(const Graph& g, const std::vector<std::vector<VertexId>>& family,
                                 const Ratio& rho) {
  return certify_family(g, family, to_big(rho));
}

FamilyCertificate certify_family(const Graph& g, const std::vector<std::vector<VertexId>>& family,
                                 const BigRatio& rho) {
  if (rho < 0) throw InputError("rho must be non-negative");
  std::vector<char> used(g.id_bound(), 0);
  for (const auto& set : family) {
    for (VertexId v : set) {
      if (v < used.size() && used[v]) {
        throw InputError("family sets overlap at vertex " + std::to_string(v));
      }
      if (v < used.size()) used[v] = 1;
    }
  }

  FamilyCertificate cert;
  cert.rho = rho;
  cert.passes = true;
  std::uint64_t kept_triangles = 0;
  std::uint64_t kept_edges = 0;
  for (const auto& set : family) {
    ClusterCertificate c;
    c.stats = induced_stats(g, set);
    c.passes = to_big(c.stats.edge_density) >= rho && to_big(c.stats.triangle_density) >= rho &&
               c.stats.radius_at_most(2);
    cert.passes = cert.passes && c.passes;
    kept_triangles += c.stats.internal_triangles;
    kept_edges += c.stats.edges;
    const Ratio worst = std::min(c.stats.edge_density, c.stats.triangle_density);
    if (!cert.rho_achieved || worst < *cert.rho_achieved) cert.rho_achieved = worst;
    cert.clusters.push_back(std::move(c));
  }
  cert.triangle_fraction_kept = fraction(kept_triangles, g.census().triangles);
  cert.edge_fraction_kept = fraction(kept_edges, g.edge_count());
  return cert;
}

bool degree_balance_holds(const Graph& g, const Ratio& epsilon) {
  for (VertexId v : g.vertices()) {
    const auto dv = static_cast<__int128>(g.degree(v));
    for (VertexId w : g.neighbors(v)) {
      const auto dw = static_cast<__int128>(g.degree(w));
      if (dv * epsilon.den() < epsilon.num() * dw) return false;
    }
  }
  return true;
}

bool neighborhoods_edge_dense(const Graph& g, const Ratio& epsilon) {
  for (VertexId v : g.vertices()) {
    const auto nbrs = g.neighbors(v);
    // Edges inside N(v) = (sum of t_(v,w) over w in N(v)) / 2.
    std::uint64_t twice_inner = 0;
    for (VertexId w : nbrs) twice_inner += g.triangles_on_edge(v, w);
    const auto lhs = static_cast<__int128>(twice_inner) * epsilon.den();
    const auto rhs = static_cast<__int128>(2 * choose2(nbrs.size())) * epsilon.num();
    if (lhs < rhs) return false;
  }
  return true;
}

}  // namespace knit
