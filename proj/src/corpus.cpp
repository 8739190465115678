#include "knit/corpus.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "knit/errors.hpp"
#include "random.hpp"

namespace knit {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void add_clique(EdgeList& out, std::size_t first, std::size_t size) {
  for (std::size_t a = first; a < first + size; ++a) {
    for (std::size_t b = a + 1; b < first + size; ++b) out.push_back({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
  }
}

void add_biclique(EdgeList& out, std::size_t first_a, std::size_t first_b, std::size_t size) {
  for (std::size_t a = first_a; a < first_a + size; ++a) {
    for (std::size_t b = first_b; b < first_b + size; ++b) out.push_back({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
  }
}

// Configuration-model pairing of `degree` stubs per vertex in [first,
// first + count); self-loops and repeated pairs are dropped afterwards.
void add_random_regular(EdgeList& out, std::size_t first, std::size_t count, std::size_t degree, detail::Rng& rng) {
  std::vector<std::size_t> stubs;
  stubs.reserve(count * degree);
  for (std::size_t v = first; v < first + count; ++v) {
    for (std::size_t s = 0; s < degree; ++s) stubs.push_back(v);
  }
  if (stubs.size() % 2 == 1) stubs.pop_back();
  detail::shuffle(stubs, rng);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    out.push_back({static_cast<std::int64_t>(stubs[i]), static_cast<std::int64_t>(stubs[i + 1])});
  }
}

EdgeList simplify(EdgeList edges) {
  EdgeList out;
  out.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u == e.v) continue;
    if (e.u > e.v) std::swap(e.u, e.v);
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

}  // namespace

std::size_t ceil_cbrt(std::size_t n) {
  std::size_t c = 0;
  while (c * c * c < n) ++c;
  return c;
}

std::string_view kind_name(const GeneratorSpec& spec) {
  return std::visit(overloaded{
                        [](const UnionOfCliques&) { return std::string_view("union_of_cliques"); },
                        [](const CompleteTripartite&) { return std::string_view("complete_tripartite"); },
                        [](const Bracelet&) { return std::string_view("bracelet"); },
                        [](const CliquePlusSparse&) { return std::string_view("clique_plus_sparse"); },
                        [](const BlocksPlusB&) { return std::string_view("blocks_plus_B"); },
                        [](const TrianglesPlusExpander&) { return std::string_view("triangles_plus_expander"); },
                        [](const ErdosRenyi&) { return std::string_view("erdos_renyi"); },
                    },
                    spec.params);
}

std::size_t vertex_count(const GeneratorSpec& spec) {
  return std::visit(overloaded{
                        [](const UnionOfCliques& p) {
                          std::size_t n = 0;
                          for (std::size_t s : p.sizes) n += s;
                          return n;
                        },
                        [](const CompleteTripartite& p) { return 3 * p.part_size; },
                        [](const Bracelet& p) { return p.m; },
                        [](const CliquePlusSparse& p) { return p.n; },
                        [](const BlocksPlusB& p) { return p.m * p.m + p.m; },
                        [](const TrianglesPlusExpander& p) { return 3 * ((p.n + 2) / 3); },
                        [](const ErdosRenyi& p) { return p.n; },
                    },
                    spec.params);
}

EdgeList generate(const GeneratorSpec& spec) {
  detail::Rng rng(spec.seed);
  EdgeList out;
  std::visit(overloaded{
                 [&](const UnionOfCliques& p) {
                   require(!p.sizes.empty(), "union_of_cliques needs at least one clique");
                   std::size_t first = 0;
                   for (std::size_t s : p.sizes) {
                     require(s >= 1, "clique sizes must be positive");
                     add_clique(out, first, s);
                     first += s;
                   }
                 },
                 [&](const CompleteTripartite& p) {
                   require(p.part_size >= 1, "complete_tripartite needs part size >= 1");
                   const std::size_t n = p.part_size;
                   add_biclique(out, 0, n, n);
                   add_biclique(out, 0, 2 * n, n);
                   add_biclique(out, n, 2 * n, n);
                 },
                 [&](const Bracelet& p) {
                   require(p.d >= 3 && p.d % 3 == 0, "bracelet needs d divisible by 3");
                   require(3 * p.m > 4 * p.d, "bracelet needs m > 4d/3");
                   const std::size_t block = p.d / 3;
                   require(p.m % block == 0, "bracelet needs d/3 to divide m");
                   const std::size_t blocks = p.m / block;
                   for (std::size_t k = 0; k < blocks; ++k) {
                     add_clique(out, k * block, block);
                     add_biclique(out, k * block, ((k + 1) % blocks) * block, block);
                   }
                 },
                 [&](const CliquePlusSparse& p) {
                   const std::size_t c = ceil_cbrt(p.n);
                   require(p.n > c + p.degree, "clique_plus_sparse needs n > n^(1/3) + degree");
                   add_clique(out, 0, c);
                   add_random_regular(out, c, p.n - c, p.degree, rng);
                 },
                 [&](const BlocksPlusB& p) {
                   require(p.m >= 2, "blocks_plus_B needs m >= 2");
                   const std::size_t m = p.m;
                   add_clique(out, 0, m * m);
                   for (std::size_t k = 0; k < m; ++k) {
                     for (std::size_t a = k * m; a < (k + 1) * m; ++a) {
                       out.push_back({static_cast<std::int64_t>(m * m + k), static_cast<std::int64_t>(a)});
                     }
                   }
                 },
                 [&](const TrianglesPlusExpander& p) {
                   require(p.n >= 3, "triangles_plus_expander needs n >= 3");
                   const std::size_t n = 3 * ((p.n + 2) / 3);
                   for (std::size_t t = 0; t < n; t += 3) add_clique(out, t, 3);
                   add_random_regular(out, 0, n, p.degree, rng);
                 },
                 [&](const ErdosRenyi& p) {
                   require(p.p >= Ratio(0) && p.p <= Ratio(1), "erdos_renyi needs p in [0, 1]");
                   const auto num = static_cast<std::uint64_t>(p.p.num());
                   const auto den = static_cast<std::uint64_t>(p.p.den());
                   for (std::size_t a = 0; a < p.n; ++a) {
                     for (std::size_t b = a + 1; b < p.n; ++b) {
                       if (detail::uniform_below(rng, den) < num) {
                         out.push_back({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
                       }
                     }
                   }
                 },
             },
             spec.params);
  return simplify(std::move(out));
}

OracleCensus oracle_census(const EdgeList& edges) {
  std::set<std::pair<VertexId, VertexId>> unique;
  std::size_t n = 0;
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    const auto a = static_cast<VertexId>(std::min(e.u, e.v));
    const auto b = static_cast<VertexId>(std::max(e.u, e.v));
    unique.emplace(a, b);
    n = std::max<std::size_t>(n, b + 1);
  }
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<std::set<VertexId>> nbrs(n);
  for (const auto& [a, b] : unique) {
    adj[a][b] = adj[b][a] = 1;
    nbrs[a].insert(b);
    nbrs[b].insert(a);
  }

  OracleCensus out;
  for (const auto& e : unique) out.edge_triangles[e] = 0;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j : nbrs[i]) {
      if (j <= i) continue;
      for (VertexId k : nbrs[j]) {
        if (k <= j || !adj[i][k]) continue;
        ++out.triangles;
        ++out.edge_triangles[{i, j}];
        ++out.edge_triangles[{j, k}];
        ++out.edge_triangles[{i, k}];
      }
    }
  }
  for (const auto& s : nbrs) out.wedges += s.size() * (s.size() - (s.empty() ? 0 : 1)) / 2;

  for (const auto& [a, b] : unique) {
    std::vector<VertexId> common;
    std::vector<VertexId> either;
    std::set_intersection(nbrs[a].begin(), nbrs[a].end(), nbrs[b].begin(), nbrs[b].end(), std::back_inserter(common));
    std::set_union(nbrs[a].begin(), nbrs[a].end(), nbrs[b].begin(), nbrs[b].end(), std::back_inserter(either));
    std::erase_if(either, [&](VertexId v) { return v == a || v == b; });
    out.edge_jaccard[{a, b}] =
        either.empty() ? Ratio(0) : Ratio(static_cast<std::int64_t>(common.size()), static_cast<std::int64_t>(either.size()));
  }
  out.triangle_density = out.wedges == 0 ? Ratio(0)
                                         : Ratio(static_cast<std::int64_t>(3 * out.triangles),
                                                 static_cast<std::int64_t>(out.wedges));
  return out;
}

}  // namespace knit
