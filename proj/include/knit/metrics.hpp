#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "knit/graph.hpp"
#include "knit/ratio.hpp"

namespace knit {

/// Whole-graph density measures. Per-edge Jaccard values are snapshotted
/// so that mu and the everywhere-dense verdict can be queried for any
/// threshold without touching the graph again.
struct DensityProfile {
  TriangleWedgeCensus census;
  Ratio triangle_density;
  Ratio edge_density;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t isolated_vertices = 0;
  std::vector<Ratio> edge_jaccard;

  /// Fraction of edges with J_e >= epsilon; 1 on an edgeless graph.
  Ratio mu_at(const Ratio& epsilon) const;
  /// Every edge has J_e >= epsilon and no vertex is isolated.
  bool everywhere_dense_at(const Ratio& epsilon) const;
  /// Smallest J_e over all edges (the largest gamma for which the graph is
  /// everywhere gamma-dense, modulo isolated vertices); 0 without edges.
  Ratio min_jaccard() const;
};

DensityProfile density_profile(const Graph& g);

/// Statistics of the subgraph induced by a vertex set.
struct InducedStats {
  std::size_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t wedges = 0;
  std::uint64_t internal_triangles = 0;  // triangles inside G|_S
  std::uint64_t incident_triangles = 0;  // triangles of G touching S
  std::uint64_t incident_edges = 0;      // edges of G touching S
  Ratio edge_density;
  Ratio triangle_density;
  std::optional<std::uint32_t> radius;  // nullopt: G|_S disconnected

  bool radius_at_most(std::uint32_t r) const { return radius && *radius <= r; }
};

/// Throws InputError if the set is empty, repeats a vertex, or names a
/// vertex not in g.
InducedStats induced_stats(const Graph& g, std::span<const VertexId> set);

struct ClusterCertificate {
  InducedStats stats;
  bool passes = false;
};

/// Check of a proposed rho-tightly-knit family against a graph.
struct FamilyCertificate {
  BigRatio rho;
  std::vector<ClusterCertificate> clusters;
  Ratio triangle_fraction_kept;
  Ratio edge_fraction_kept;
  /// min over clusters of min(edge density, triangle density); nullopt
  /// for an empty family.
  std::optional<Ratio> rho_achieved;
  bool passes = false;
};

/// Throws InputError when the sets overlap or name absent vertices.
FamilyCertificate certify_family(const Graph& g, const std::vector<std::vector<VertexId>>& family,
                                 const BigRatio& rho);
FamilyCertificate certify_family(const Graph& g, const std::vector<std::vector<VertexId>>& family,
                                 const Ratio& rho);

/// d_u >= epsilon * d_v for every edge, in both directions.
bool degree_balance_holds(const Graph& g, const Ratio& epsilon);

/// Every neighborhood N(v) induces at least epsilon * C(d_v, 2) edges.
bool neighborhoods_edge_dense(const Graph& g, const Ratio& epsilon);

}  // namespace knit
