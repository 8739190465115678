#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knit/graph.hpp"
#include "knit/ratio.hpp"

namespace knit {

/// How noise vertices (B) are wired into a threshold graph.
enum class Attachment {
  isolated,               // no edges
  single_clique_pendant,  // a random nonempty subset of one random clique
  b_internal,             // random B-B edges, plus a pendant attachment for about half of B
};

std::string_view attachment_name(Attachment a);
Attachment parse_attachment(std::string_view name);

struct ThresholdParams {
  std::vector<std::size_t> clique_sizes;  // k = clique_sizes.size(), each >= 3
  std::size_t noise_size = 0;
  Attachment attachment = Attachment::isolated;
  std::uint64_t seed = 0;
};

/// k planted disjoint cliques whose closed neighborhoods are pairwise
/// disjoint. Clique a holds consecutive ids in order; noise ids follow.
struct ThresholdInstance {
  Graph graph;
  EdgeList edges;
  std::vector<std::vector<VertexId>> cliques;
  std::vector<VertexId> noise;
};

/// Throws InputError for an empty clique list or a clique smaller than 3.
/// The result is re-checked with verify_threshold before returning.
ThresholdInstance generate_threshold(const ThresholdParams& params);

/// Checks the structural conditions; throws ContractViolation naming the
/// first one that fails.
void verify_threshold(const ThresholdInstance& instance);

struct PlantedCluster {
  VertexId center = 0;
  std::vector<VertexId> neighborhood;  // N(center) when it was chosen
  std::vector<VertexId> members;       // ascending
};

struct Score {
  /// min over permutations of sum_a |X_sigma(a) \ S_a|
  std::uint64_t incorrectness = 0;
  /// matching[a] = index of the clique assigned to cluster a; rows past the
  /// last recovered cluster stand for empty clusters.
  std::vector<std::size_t> matching;
};

struct ClusteringResult {
  std::vector<PlantedCluster> clusters;
  std::optional<Score> score;
};

struct RecoverOptions {
  /// Clean before the first extraction and after every extraction.
  bool clean = false;
  /// Cleaning threshold; tau / 4 when unset.
  std::optional<Ratio> epsilon;
};

/// Up to k extractions keeping only positive-theta vertices in R. Stops
/// early when the graph runs out of edges. Throws InputError for k == 0.
ClusteringResult recover(const Graph& graph, std::size_t k, const RecoverOptions& options = {});

/// Recovers with k = number of planted cliques and fills in the score.
ClusteringResult recover(const ThresholdInstance& instance, const RecoverOptions& options = {});

/// Exact best matching between recovered clusters and planted cliques
/// (lexicographically smallest among optimal permutations).
Score score(const ClusteringResult& result, const std::vector<std::vector<VertexId>>& cliques);

/// For each cluster whose center sits next to (not inside) a planted
/// clique X, the center's neighborhood must lie within X ∪ B. Returns a
/// description of every cluster where that fails.
std::vector<std::string> neighborhood_partition_violations(const ClusteringResult& result,
                                                           const ThresholdInstance& instance);

}  // namespace knit
