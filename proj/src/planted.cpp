#include "knit/planted.hpp"

#include <algorithm>
#include <set>

#include "knit/assignment.hpp"
#include "knit/decomposition.hpp"
#include "knit/errors.hpp"
#include "random.hpp"

namespace knit {
namespace {

// Attaches b to a random nonempty subset of one random clique.
void attach_pendant(EdgeList& edges, VertexId b, const std::vector<std::vector<VertexId>>& cliques,
                    detail::Rng& rng) {
  const auto& clique = cliques[detail::uniform_below(rng, cliques.size())];
  std::vector<VertexId> pick = clique;
  detail::shuffle(pick, rng);
  const std::size_t count = 1 + detail::uniform_below(rng, pick.size());
  for (std::size_t i = 0; i < count; ++i) edges.push_back({b, pick[i]});
}

}  // namespace

std::string_view attachment_name(Attachment a) {
  switch (a) {
    case Attachment::isolated:
      return "isolated";
    case Attachment::single_clique_pendant:
      return "single_clique_pendant";
    case Attachment::b_internal:
      return "b_internal";
  }
  return "unknown";
}

Attachment parse_attachment(std::string_view name) {
  for (Attachment a : {Attachment::isolated, Attachment::single_clique_pendant, Attachment::b_internal}) {
    if (attachment_name(a) == name) return a;
  }
  throw InputError("unknown attachment rule '" + std::string(name) + "'");
}

ThresholdInstance generate_threshold(const ThresholdParams& params) {
  if (params.clique_sizes.empty()) throw InputError("a threshold graph needs at least one clique");
  ThresholdInstance inst;
  VertexId next = 0;
  for (std::size_t size : params.clique_sizes) {
    if (size < 3) throw InputError("planted cliques need at least 3 vertices, got " + std::to_string(size));
    auto& clique = inst.cliques.emplace_back();
    for (std::size_t i = 0; i < size; ++i) clique.push_back(next++);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) inst.edges.push_back({clique[i], clique[j]});
    }
  }
  for (std::size_t i = 0; i < params.noise_size; ++i) inst.noise.push_back(next++);

  detail::Rng rng(params.seed);
  switch (params.attachment) {
    case Attachment::isolated:
      break;
    case Attachment::single_clique_pendant:
      for (VertexId b : inst.noise) attach_pendant(inst.edges, b, inst.cliques, rng);
      break;
    case Attachment::b_internal:
      for (std::size_t i = 0; i < inst.noise.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.noise.size(); ++j) {
          if (detail::uniform_below(rng, 2) == 0) inst.edges.push_back({inst.noise[i], inst.noise[j]});
        }
      }
      for (VertexId b : inst.noise) {
        if (detail::uniform_below(rng, 2) == 0) attach_pendant(inst.edges, b, inst.cliques, rng);
      }
      break;
  }
  std::sort(inst.edges.begin(), inst.edges.end());
  inst.graph = Graph::build(inst.edges, next);
  verify_threshold(inst);
  return inst;
}

void verify_threshold(const ThresholdInstance& inst) {
  auto fail = [](const std::string& what) { throw ContractViolation("threshold instance: " + what); };
  const Graph& g = inst.graph;
  constexpr std::size_t none = SIZE_MAX;
  std::vector<std::size_t> owner(g.id_bound(), none);
  std::vector<char> noise(g.id_bound(), 0);
  for (std::size_t a = 0; a < inst.cliques.size(); ++a) {
    if (inst.cliques[a].size() < 3) fail("clique " + std::to_string(a) + " has fewer than 3 vertices");
    for (VertexId v : inst.cliques[a]) {
      if (!g.has_vertex(v) || owner[v] != none) fail("clique vertex " + std::to_string(v) + " is absent or shared");
      owner[v] = a;
    }
  }
  for (VertexId v : inst.noise) {
    if (!g.has_vertex(v) || owner[v] != none || noise[v]) fail("noise vertex " + std::to_string(v) + " is invalid");
    noise[v] = 1;
  }
  for (VertexId v : g.vertices()) {
    if (owner[v] == none && !noise[v]) fail("vertex " + std::to_string(v) + " is in no clique and not in B");
  }
  for (std::size_t a = 0; a < inst.cliques.size(); ++a) {
    const auto& clique = inst.cliques[a];
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        if (!g.has_edge(clique[i], clique[j])) fail("clique " + std::to_string(a) + " is missing an edge");
      }
    }
  }
  for (VertexId v : g.vertices()) {
    std::set<std::size_t> touched;
    if (owner[v] != none) touched.insert(owner[v]);
    for (VertexId w : g.neighbors(v)) {
      if (owner[w] != none) touched.insert(owner[w]);
    }
    // Two planted cliques meeting in N*(v) means their closed
    // neighborhoods intersect (or two cliques are adjacent).
    if (touched.size() > 1) fail("vertex " + std::to_string(v) + " touches more than one planted clique");
  }
}

ClusteringResult recover(const Graph& graph, std::size_t k, const RecoverOptions& options) {
  if (k == 0) throw InputError("k must be at least 1");
  Graph g = graph;
  Ratio epsilon;
  if (options.clean) {
    epsilon = options.epsilon ? *options.epsilon : auto_epsilon(g);
    clean_all(g, epsilon);
  }
  ClusteringResult result;
  while (result.clusters.size() < k && g.edge_count() > 0) {
    Cluster c = extract(g, true);
    result.clusters.push_back({c.center, std::move(c.neighborhood), std::move(c.members)});
    if (options.clean) clean(g, epsilon, c.frontier);
  }
  return result;
}

ClusteringResult recover(const ThresholdInstance& instance, const RecoverOptions& options) {
  auto result = recover(instance.graph, instance.cliques.size(), options);
  result.score = score(result, instance.cliques);
  return result;
}

Score score(const ClusteringResult& result, const std::vector<std::vector<VertexId>>& cliques) {
  const std::size_t k = cliques.size();
  if (result.clusters.size() > k) throw InputError("more clusters than planted cliques");
  std::vector<std::vector<std::int64_t>> cost(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a >= result.clusters.size()) {
        cost[a][b] = static_cast<std::int64_t>(cliques[b].size());
        continue;
      }
      const auto& members = result.clusters[a].members;
      cost[a][b] = std::count_if(cliques[b].begin(), cliques[b].end(), [&](VertexId v) {
        return !std::binary_search(members.begin(), members.end(), v);
      });
    }
  }
  const Assignment best = min_cost_assignment(cost);
  return {static_cast<std::uint64_t>(best.cost), best.columns};
}

std::vector<std::string> neighborhood_partition_violations(const ClusteringResult& result,
                                                           const ThresholdInstance& instance) {
  const Graph& g = instance.graph;
  constexpr std::size_t none = SIZE_MAX;
  std::vector<std::size_t> owner(g.id_bound(), none);
  for (std::size_t a = 0; a < instance.cliques.size(); ++a) {
    for (VertexId v : instance.cliques[a]) owner[v] = a;
  }
  std::vector<std::string> out;
  for (std::size_t b = 0; b < result.clusters.size(); ++b) {
    const auto& c = result.clusters[b];
    if (owner[c.center] != none) continue;
    std::set<std::size_t> adjacent;
    for (VertexId w : g.neighbors(c.center)) {
      if (owner[w] != none) adjacent.insert(owner[w]);
    }
    if (adjacent.empty()) continue;
    if (adjacent.size() > 1) {
      out.push_back("cluster " + std::to_string(b) + ": center " + std::to_string(c.center) +
                    " is adjacent to several planted cliques");
      continue;
    }
    const std::size_t x = *adjacent.begin();
    for (VertexId w : c.neighborhood) {
      if (owner[w] != none && owner[w] != x) {
        out.push_back("cluster " + std::to_string(b) + ": neighbor " + std::to_string(w) + " lies in clique " +
                      std::to_string(owner[w]));
      }
    }
  }
  return out;
}

}  // namespace knit
