#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "knit/graph.hpp"
#include "knit/metrics.hpp"
#include "knit/ratio.hpp"

namespace knit {

struct EdgeRemoval {
  VertexId u = 0;
  VertexId v = 0;
  Ratio jaccard;                         // at removal time, always < epsilon
  std::uint64_t wedges_destroyed = 0;    // d_u + d_v - 2
  std::uint64_t triangles_destroyed = 0;  // t_e
};

struct CleaningLog {
  std::vector<EdgeRemoval> removed_edges;
  std::vector<VertexId> isolated_vertices_removed;

  std::uint64_t wedges_destroyed() const;
  std::uint64_t triangles_destroyed() const;
};

/// Repeatedly deletes edges with Jaccard similarity below epsilon, starting
/// from the dirty vertices, then deletes every touched vertex left isolated.
///
/// Worklist order: take the lowest-id dirty vertex and scan its neighbors
/// in ascending order. A low-similarity edge is deleted, both endpoints are
/// (re)marked dirty and the scan restarts from the lowest dirty vertex. A
/// vertex whose scan finds nothing leaves the worklist.
///
/// On return every edge incident to a touched vertex has J_e >= epsilon.
/// Throws InputError unless 0 < epsilon <= 1, and ContractViolation for a
/// dirty vertex not in g.
CleaningLog clean(Graph& g, const Ratio& epsilon, std::span<const VertexId> dirty);

/// clean() with every present vertex dirty.
CleaningLog clean_all(Graph& g, const Ratio& epsilon);

/// One extracted set S = {center} ∪ N(center) ∪ R.
struct Cluster {
  VertexId center = 0;
  std::size_t center_degree = 0;
  std::vector<VertexId> neighborhood;  // N(center) at extraction time
  std::vector<VertexId> top_theta;     // R, in selection order
  std::vector<VertexId> members;       // S, ascending
  /// (vertex, theta) for every vertex with theta > 0, ascending by id.
  std::vector<std::pair<VertexId, std::uint64_t>> theta;
  /// G|_S in the graph extracted from, measured just before deletion.
  InducedStats stats;
  /// Surviving neighbors of S; the next cleaning starts from these.
  std::vector<VertexId> frontier;

  bool center_in_top_theta() const;
};

/// Extracts one cluster around the lowest-id maximum-degree vertex and
/// deletes it from g.
///
/// theta_j counts, once per edge (a, b) inside N(center), each j adjacent
/// to both a and b. R is the center_degree vertices of largest theta
/// (ties to the lower id) among those with theta > 0, so |R| may be
/// smaller than center_degree. `positive_theta_only` requests the
/// filter explicitly; with theta collected as a multiset the two settings
/// select the same R.
///
/// Throws ContractViolation on a graph without edges.
Cluster extract(Graph& g, bool positive_theta_only);

/// The per-extraction guarantees for a cluster extracted from an
/// everywhere epsilon-dense graph, each decided exactly.
struct ExtractionBounds {
  bool internal_triangle_mass = false;  // t_S^(I) >= eps^4 d^3 / 384
  bool internal_triangle_share = false;  // t_S^(I) >= eps^4 / 384 * t_S
  bool edge_mass = false;                // |E(G|_S)| >= eps * C(d, 2)
  bool radius = false;                   // radius(G|_S) <= 2
  bool edge_share_positive = false;      // |E(G|_S)| / edges touching S > 0

  bool all() const {
    return internal_triangle_mass && internal_triangle_share && edge_mass && radius && edge_share_positive;
  }
};

ExtractionBounds check_extraction_bounds(const Cluster& cluster, const Ratio& epsilon);

struct DecompositionReport {
  Ratio epsilon;
  std::size_t input_vertices = 0;
  std::size_t input_edges = 0;
  TriangleWedgeCensus input_census;
  /// cleaning[0] is the initial clean; cleaning[k + 1] follows extraction k.
  std::vector<CleaningLog> cleaning;
  /// Input vertices that ended up in no cluster.
  std::vector<VertexId> unclustered;
  /// Against the input graph: triangles / edges inside the clusters.
  Ratio triangle_fraction_kept;
  Ratio edge_fraction_kept;
  /// Elementary operations charged to the working graph by the run itself
  /// (excludes building the input).
  std::uint64_t operations = 0;
};

struct TightlyKnitFamily {
  std::vector<Cluster> clusters;
  Ratio epsilon_used;
  DecompositionReport report;

  std::vector<std::vector<VertexId>> member_sets() const;
};

/// Alternates cleaning and extraction on a copy of `input` until no edges
/// remain. Throws InputError unless 0 < epsilon <= 1.
TightlyKnitFamily decompose(const Graph& input, const Ratio& epsilon);

/// min(eps^4 / 128, eps / 4): the density level every family produced at
/// this epsilon is expected to certify at.
BigRatio family_guarantee(const Ratio& epsilon);

/// Lower bound eps^4 / 1536 on the fraction of the input's triangles that
/// end up inside clusters when epsilon <= tau / 4.
BigRatio retention_guarantee(const Ratio& epsilon);

/// epsilon = tau / 4; throws InputError when the graph has no triangles.
Ratio auto_epsilon(const Graph& g);

/// Re-applies every logged removal and extraction to `input`, checking each
/// against the live graph. Throws ContractViolation on the first mismatch.
void replay(const Graph& input, const TightlyKnitFamily& family);

}  // namespace knit
