#include "knit/decomposition.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "knit/errors.hpp"

namespace knit {
namespace {

using boost::multiprecision::cpp_int;

void require_epsilon(const Ratio& epsilon) {
  if (epsilon <= Ratio(0) || epsilon > Ratio(1)) {
    throw InputError("epsilon must lie in (0, 1], got " + epsilon.to_string());
  }
}

cpp_int pow4(std::int64_t x) {
  cpp_int v = x;
  return v * v * v * v;
}

// Edges and triangles of G|_S for each set, counted directly on g.
std::pair<std::uint64_t, std::uint64_t> inner_counts(const Graph& g, const std::vector<VertexId>& set,
                                                     std::vector<char>& in) {
  for (VertexId v : set) in[v] = 1;
  std::uint64_t edges = 0;
  std::uint64_t triangles = 0;
  for (VertexId v : set) {
    for (VertexId w : g.neighbors(v)) {
      if (w <= v || !in[w]) continue;
      ++edges;
      for (VertexId k : g.common_neighbors(v, w)) {
        if (k > w && in[k]) ++triangles;
      }
    }
  }
  for (VertexId v : set) in[v] = 0;
  return {edges, triangles};
}

Ratio fraction(std::uint64_t part, std::uint64_t whole) {
  if (whole == 0) return Ratio(1);
  return Ratio(static_cast<std::int64_t>(part), static_cast<std::int64_t>(whole));
}

}  // namespace

std::uint64_t CleaningLog::wedges_destroyed() const {
  std::uint64_t total = 0;
  for (const auto& r : removed_edges) total += r.wedges_destroyed;
  return total;
}

std::uint64_t CleaningLog::triangles_destroyed() const {
  std::uint64_t total = 0;
  for (const auto& r : removed_edges) total += r.triangles_destroyed;
  return total;
}

CleaningLog clean(Graph& g, const Ratio& epsilon, std::span<const VertexId> dirty) {
  require_epsilon(epsilon);
  std::set<VertexId> work;
  for (VertexId v : dirty) {
    if (!g.has_vertex(v)) throw ContractViolation("dirty vertex " + std::to_string(v) + " is not in the graph");
    work.insert(v);
  }
  g.charge(2 * dirty.size());
  std::set<VertexId> touched = work;

  CleaningLog log;
  while (!work.empty()) {
    const VertexId i = *work.begin();
    g.charge(1);
    bool removed = false;
    for (VertexId j : g.neighbors(i)) {
      g.charge(1);
      if (!g.jaccard_below(i, j, epsilon)) continue;
      EdgeRemoval r;
      r.u = i;
      r.v = j;
      r.jaccard = g.jaccard(i, j);
      r.triangles_destroyed = g.triangles_on_edge(i, j);
      r.wedges_destroyed = g.degree(i) + g.degree(j) - 2;
      log.removed_edges.push_back(r);
      g.delete_edge(i, j);
      work.insert(j);
      touched.insert(j);
      removed = true;
      break;
    }
    if (!removed) work.erase(i);
  }

  for (VertexId v : touched) {
    if (g.has_vertex(v) && g.degree(v) == 0) {
      g.delete_vertex(v);
      log.isolated_vertices_removed.push_back(v);
    }
  }
  return log;
}

CleaningLog clean_all(Graph& g, const Ratio& epsilon) {
  const auto all = g.vertices();
  return clean(g, epsilon, all);
}

bool Cluster::center_in_top_theta() const {
  return std::find(top_theta.begin(), top_theta.end(), center) != top_theta.end();
}

Cluster extract(Graph& g, bool positive_theta_only) {
  Cluster c;
  c.center = g.max_degree_vertex();
  const auto nbrs = g.neighbors(c.center);
  c.neighborhood.assign(nbrs.begin(), nbrs.end());
  c.center_degree = c.neighborhood.size();

  std::vector<char> in_nbhd(g.id_bound(), 0);
  for (VertexId v : c.neighborhood) in_nbhd[v] = 1;

  std::unordered_map<VertexId, std::uint64_t> theta;
  for (VertexId a : c.neighborhood) {
    for (VertexId b : g.neighbors(a)) {
      g.charge(1);
      if (b <= a || !in_nbhd[b]) continue;
      for (VertexId j : g.common_neighbors(a, b)) {
        ++theta[j];
        g.charge(1);
      }
    }
  }

  c.theta.assign(theta.begin(), theta.end());
  g.charge(c.theta.size());
  auto by_weight = c.theta;
  std::sort(by_weight.begin(), by_weight.end(), [](const auto& x, const auto& y) {
    return x.second != y.second ? x.second > y.second : x.first < y.first;
  });
  std::sort(c.theta.begin(), c.theta.end());
  for (const auto& [j, count] : by_weight) {
    if (c.top_theta.size() == c.center_degree) break;
    if (positive_theta_only && count == 0) continue;
    c.top_theta.push_back(j);
  }

  c.members = c.neighborhood;
  c.members.push_back(c.center);
  c.members.insert(c.members.end(), c.top_theta.begin(), c.top_theta.end());
  std::sort(c.members.begin(), c.members.end());
  c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());

  {
    Graph::UnchargedScope audit(g);
    c.stats = induced_stats(g, c.members);
  }

  std::vector<char> in_set(g.id_bound(), 0);
  for (VertexId v : c.members) in_set[v] = 1;
  for (VertexId v : c.members) {
    for (VertexId w : g.neighbors(v)) {
      if (!in_set[w]) c.frontier.push_back(w);
    }
  }
  std::sort(c.frontier.begin(), c.frontier.end());
  c.frontier.erase(std::unique(c.frontier.begin(), c.frontier.end()), c.frontier.end());
  g.charge(c.frontier.size());

  for (VertexId v : c.members) g.delete_vertex(v);
  return c;
}

ExtractionBounds check_extraction_bounds(const Cluster& cluster, const Ratio& epsilon) {
  const cpp_int p4 = pow4(epsilon.num());
  const cpp_int q4 = pow4(epsilon.den());
  const cpp_int d = cluster.center_degree;
  const cpp_int inner = cluster.stats.internal_triangles;
  const cpp_int lhs = 384 * inner * q4;

  ExtractionBounds b;
  b.internal_triangle_mass = lhs >= p4 * d * d * d;
  b.internal_triangle_share = lhs >= p4 * cpp_int(cluster.stats.incident_triangles);
  b.edge_mass = cpp_int(cluster.stats.edges) * epsilon.den() >=
                cpp_int(epsilon.num()) * cpp_int(choose2(cluster.center_degree));
  b.radius = cluster.stats.radius_at_most(2);
  b.edge_share_positive = cluster.stats.edges > 0;
  return b;
}

std::vector<std::vector<VertexId>> TightlyKnitFamily::member_sets() const {
  std::vector<std::vector<VertexId>> sets;
  sets.reserve(clusters.size());
  for (const auto& c : clusters) sets.push_back(c.members);
  return sets;
}

TightlyKnitFamily decompose(const Graph& input, const Ratio& epsilon) {
  require_epsilon(epsilon);
  TightlyKnitFamily family;
  family.epsilon_used = epsilon;
  auto& report = family.report;
  report.epsilon = epsilon;
  report.input_vertices = input.vertex_count();
  report.input_edges = input.edge_count();
  report.input_census = input.census();

  Graph g = input;
  const std::uint64_t ops_before = g.operation_count();
  report.cleaning.push_back(clean_all(g, epsilon));
  while (g.edge_count() > 0) {
    family.clusters.push_back(extract(g, false));
    report.cleaning.push_back(clean(g, epsilon, family.clusters.back().frontier));
  }
  report.operations = g.operation_count() - ops_before;

  std::vector<char> clustered(input.id_bound(), 0);
  std::uint64_t kept_edges = 0;
  std::uint64_t kept_triangles = 0;
  std::vector<char> scratch(input.id_bound(), 0);
  for (const auto& c : family.clusters) {
    for (VertexId v : c.members) clustered[v] = 1;
    const auto [edges, triangles] = inner_counts(input, c.members, scratch);
    kept_edges += edges;
    kept_triangles += triangles;
  }
  for (VertexId v : input.vertices()) {
    if (!clustered[v]) report.unclustered.push_back(v);
  }
  report.triangle_fraction_kept = fraction(kept_triangles, report.input_census.triangles);
  report.edge_fraction_kept = fraction(kept_edges, report.input_edges);
  return family;
}

BigRatio family_guarantee(const Ratio& epsilon) {
  const BigRatio e = to_big(epsilon);
  const BigRatio quartic = e * e * e * e / 128;
  const BigRatio linear = e / 4;
  return quartic < linear ? quartic : linear;
}

BigRatio retention_guarantee(const Ratio& epsilon) {
  const BigRatio e = to_big(epsilon);
  return e * e * e * e / 1536;
}

Ratio auto_epsilon(const Graph& g) {
  const auto census = g.census();
  if (census.triangles == 0) throw InputError("graph has no triangles; automatic epsilon is undefined");
  return census.triangle_density() * Ratio(1, 4);
}

void replay(const Graph& input, const TightlyKnitFamily& family) {
  auto fail = [](const std::string& what) { throw ContractViolation("replay: " + what); };
  const auto& report = family.report;
  const Ratio& eps = family.epsilon_used;
  if (report.cleaning.size() != family.clusters.size() + 1) fail("phase count does not match cluster count");

  Graph g = input;
  for (std::size_t phase = 0; phase < report.cleaning.size(); ++phase) {
    if (phase > 0) {
      const Cluster& want = family.clusters[phase - 1];
      if (g.edge_count() == 0) fail("graph exhausted before cluster " + std::to_string(phase - 1));
      const Cluster got = extract(g, false);
      if (got.center != want.center || got.members != want.members || got.top_theta != want.top_theta) {
        fail("cluster " + std::to_string(phase - 1) + " does not reproduce");
      }
    }
    for (const auto& r : report.cleaning[phase].removed_edges) {
      if (!g.has_edge(r.u, r.v)) {
        fail("logged edge (" + std::to_string(r.u) + ", " + std::to_string(r.v) + ") is absent");
      }
      if (g.jaccard(r.u, r.v) != r.jaccard || !(r.jaccard < eps) ||
          g.triangles_on_edge(r.u, r.v) != r.triangles_destroyed ||
          g.degree(r.u) + g.degree(r.v) - 2 != r.wedges_destroyed) {
        fail("logged removal of (" + std::to_string(r.u) + ", " + std::to_string(r.v) + ") disagrees with the graph");
      }
      g.delete_edge(r.u, r.v);
    }
    for (VertexId v : report.cleaning[phase].isolated_vertices_removed) {
      if (!g.has_vertex(v) || g.degree(v) != 0) fail("vertex " + std::to_string(v) + " was not isolated");
      g.delete_vertex(v);
    }
    if (!density_profile(g).everywhere_dense_at(eps)) {
      fail("graph after phase " + std::to_string(phase) + " is not everywhere dense");
    }
  }
  if (g.edge_count() != 0) fail("edges remain after the last phase");
  std::vector<char> clustered(input.id_bound(), 0);
  for (const auto& c : family.clusters) {
    for (VertexId v : c.members) clustered[v] = 1;
  }
  std::vector<VertexId> expect;
  for (VertexId v : input.vertices()) {
    if (!clustered[v]) expect.push_back(v);
  }
  if (expect != report.unclustered) fail("unclustered vertex list does not reproduce");
}

}  // namespace knit
