#include "knit/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "knit/corpus.hpp"
#include "knit/decomposition.hpp"
#include "knit/errors.hpp"
#include "knit/io.hpp"
#include "knit/metrics.hpp"
#include "knit/planted.hpp"
#include "knit/report.hpp"

namespace knit::cli {
namespace {

std::string fixed3(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << x;
  return os.str();
}

std::string show(const Ratio& r) {
  if (r.den() == 1) return r.to_string();
  return r.to_string() + " (" + fixed3(r.to_double()) + ")";
}

std::string show_radius(const InducedStats& s) { return s.radius ? std::to_string(*s.radius) : "inf"; }

Graph load_graph(const RunConfig& cfg) {
  if (cfg.input.empty()) throw InputError("--input is required");
  const EdgeList edges = read_edge_list(cfg.input);
  return Graph::build(edges);
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int stats(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const DensityProfile profile = density_profile(g);
  std::vector<Ratio> ladder = {Ratio(1, 16), Ratio(1, 8), Ratio(1, 4), Ratio(1, 2), Ratio(3, 4), Ratio(1)};
  if (cfg.epsilon && std::find(ladder.begin(), ladder.end(), *cfg.epsilon) == ladder.end()) {
    ladder.push_back(*cfg.epsilon);
    std::sort(ladder.begin(), ladder.end());
  }

  if (cfg.format == ReportFormat::structured) {
    Json j;
    j["vertices"] = profile.vertices;
    j["edges"] = profile.edges;
    j["triangles"] = profile.census.triangles;
    j["wedges"] = profile.census.wedges;
    j["triangle_density"] = profile.triangle_density.to_string();
    j["edge_density"] = profile.edge_density.to_string();
    j["isolated_vertices"] = profile.isolated_vertices;
    Json rows = Json::array();
    for (const Ratio& eps : ladder) {
      Json row;
      row["epsilon"] = eps.to_string();
      row["mu"] = profile.mu_at(eps).to_string();
      row["everywhere_dense"] = profile.everywhere_dense_at(eps);
      rows.push_back(std::move(row));
    }
    j["ladder"] = std::move(rows);
    write_json(out, j);
    return kOk;
  }

  out << "vertices: " << profile.vertices << '\n'
      << "edges: " << profile.edges << '\n'
      << "triangles: " << profile.census.triangles << '\n'
      << "wedges: " << profile.census.wedges << '\n'
      << "τ = " << show(profile.triangle_density) << '\n'
      << "edge density: " << show(profile.edge_density) << '\n';
  for (const Ratio& eps : ladder) {
    out << "ε = " << eps << ": μ = " << show(profile.mu_at(eps))
        << ", everywhere dense: " << (profile.everywhere_dense_at(eps) ? "yes" : "no") << '\n';
  }
  return kOk;
}

int decompose_cmd(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const Ratio eps = cfg.epsilon ? *cfg.epsilon : auto_epsilon(g);
  const TightlyKnitFamily family = decompose(g, eps);
  const auto sets = family.member_sets();
  const FamilyCertificate cert = certify_family(g, sets, family_guarantee(eps));

  if (!cfg.family_out.empty()) {
    std::ofstream f(cfg.family_out);
    if (!f) throw InputError("cannot write '" + cfg.family_out + "'");
    write_family(f, sets);
  }

  if (cfg.format == ReportFormat::structured) {
    Json j;
    j["decomposition"] = to_json(family);
    j["certificate"] = to_json(cert);
    write_json(out, j);
    return kOk;
  }

  out << "epsilon: " << show(eps) << '\n' << "clusters: " << family.clusters.size() << '\n';
  for (std::size_t i = 0; i < family.clusters.size(); ++i) {
    const auto& c = family.clusters[i];
    const auto& s = cert.clusters[i].stats;
    out << "cluster " << i << ": center " << c.center << ", size " << c.members.size() << ", edge density "
        << fixed3(s.edge_density.to_double()) << ", triangle density " << fixed3(s.triangle_density.to_double())
        << ", radius " << show_radius(s) << ", certified " << (cert.clusters[i].passes ? "yes" : "no") << '\n';
  }
  out << "certification level: rho = " << to_string(cert.rho) << '\n';
  if (cert.rho_achieved) out << "rho achieved: " << show(*cert.rho_achieved) << '\n';
  out << "family certified: " << (cert.passes ? "yes" : "no") << '\n'
      << "triangles kept: " << fixed3(family.report.triangle_fraction_kept.to_double()) << '\n'
      << "edges kept: " << fixed3(family.report.edge_fraction_kept.to_double()) << '\n'
      << "unclustered vertices: " << family.report.unclustered.size() << '\n';
  return kOk;
}

int cluster_cmd(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  std::optional<GroundTruth> truth;
  if (!cfg.truth.empty()) {
    truth = read_truth(cfg.truth);
  } else if (std::filesystem::exists(cfg.input + ".truth")) {
    truth = read_truth(cfg.input + ".truth");
  }
  std::size_t k = 0;
  if (cfg.k) {
    k = *cfg.k;
  } else if (truth) {
    k = truth->cliques.size();
  } else {
    throw InputError("--k is required when no ground-truth file is available");
  }

  RecoverOptions options;
  options.clean = cfg.clean;
  options.epsilon = cfg.epsilon;
  ClusteringResult result = recover(g, k, options);
  std::uint64_t bound = 0;
  if (truth) {
    if (truth->cliques.size() != k) throw InputError("--k differs from the number of planted cliques");
    result.score = score(result, truth->cliques);
    bound = 14 * truth->noise.size();
  }

  if (cfg.format == ReportFormat::structured) {
    Json j;
    j["k"] = k;
    j["result"] = to_json(result);
    if (truth) {
      j["noise"] = truth->noise.size();
      j["bound"] = bound;
    }
    write_json(out, j);
    return kOk;
  }

  out << "k: " << k << '\n';
  for (std::size_t i = 0; i < result.clusters.size(); ++i) {
    const auto& c = result.clusters[i];
    out << "cluster " << i << ": center " << c.center << ", size " << c.members.size() << '\n';
  }
  if (result.score) {
    const auto delta = result.score->incorrectness;
    out << "Δ = " << delta << (delta <= bound ? " ≤ " : " > ") << bound << '\n';
  }
  return kOk;
}

GeneratorSpec generator_spec(const RunConfig& cfg) {
  GeneratorSpec spec;
  spec.seed = cfg.seed;
  const std::string& kind = cfg.kind;
  if (kind == "union_of_cliques") {
    spec.params = UnionOfCliques{cfg.sizes};
  } else if (kind == "complete_tripartite") {
    spec.params = CompleteTripartite{cfg.n};
  } else if (kind == "bracelet") {
    spec.params = Bracelet{cfg.m, cfg.d};
  } else if (kind == "clique_plus_sparse") {
    spec.params = CliquePlusSparse{cfg.n, cfg.degree};
  } else if (kind == "blocks_plus_B") {
    spec.params = BlocksPlusB{cfg.m};
  } else if (kind == "triangles_plus_expander") {
    spec.params = TrianglesPlusExpander{cfg.n, cfg.degree};
  } else if (kind == "erdos_renyi") {
    if (!cfg.p) throw InputError("erdos_renyi needs --p");
    spec.params = ErdosRenyi{cfg.n, *cfg.p};
  } else {
    throw InputError("unknown generator kind '" + kind + "'");
  }
  return spec;
}

int generate_cmd(const RunConfig& cfg, std::ostream& out) {
  if (cfg.kind == "threshold") {
    if (cfg.output.empty()) throw InputError("threshold instances need --output (the sidecar goes next to it)");
    ThresholdParams params;
    params.clique_sizes = cfg.sizes;
    if (cfg.k && params.clique_sizes.size() == 1) params.clique_sizes.assign(*cfg.k, cfg.sizes.front());
    if (cfg.k && params.clique_sizes.size() != *cfg.k) throw InputError("--k does not match the number of --sizes");
    params.noise_size = cfg.noise;
    params.attachment = parse_attachment(cfg.attachment);
    params.seed = cfg.seed;
    const ThresholdInstance inst = generate_threshold(params);
    std::ofstream edges(cfg.output);
    std::ofstream sidecar(cfg.output + ".truth");
    if (!edges || !sidecar) throw InputError("cannot write '" + cfg.output + "'");
    write_edge_list(edges, inst.edges);
    write_truth(sidecar, {inst.cliques, inst.noise});
    out << "wrote " << inst.edges.size() << " edges to " << cfg.output << " and ground truth to " << cfg.output
        << ".truth\n";
    return kOk;
  }

  const EdgeList edges = generate(generator_spec(cfg));
  if (cfg.output.empty()) {
    write_edge_list(out, edges);
    return kOk;
  }
  std::ofstream f(cfg.output);
  if (!f) throw InputError("cannot write '" + cfg.output + "'");
  write_edge_list(f, edges);
  out << "wrote " << edges.size() << " edges to " << cfg.output << '\n';
  return kOk;
}

int verify_cmd(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  if (cfg.family.empty()) throw InputError("--family is required");
  const auto family = read_family(cfg.family);
  FamilyCertificate cert;
  if (cfg.rho) {
    if (*cfg.rho <= Ratio(0) || *cfg.rho > Ratio(1)) throw InputError("--rho must lie in (0, 1]");
    cert = certify_family(g, family, *cfg.rho);
  } else {
    // Without a requested level, certify at the best level the family reaches.
    const auto probe = certify_family(g, family, Ratio(0));
    cert = certify_family(g, family, probe.rho_achieved.value_or(Ratio(0)));
    cert.passes = cert.passes && cert.rho > 0;
  }

  if (cfg.format == ReportFormat::structured) {
    write_json(out, to_json(cert));
    return kOk;
  }
  out << "rho: " << to_string(cert.rho) << '\n';
  for (std::size_t i = 0; i < cert.clusters.size(); ++i) {
    const auto& s = cert.clusters[i].stats;
    out << "cluster " << i << ": size " << s.vertices << ", edge density " << show(s.edge_density)
        << ", triangle density " << show(s.triangle_density) << ", radius " << show_radius(s)
        << ", internal triangles " << s.internal_triangles << ", incident triangles " << s.incident_triangles
        << ", " << (cert.clusters[i].passes ? "pass" : "fail") << '\n';
  }
  if (cert.rho_achieved) out << "rho achieved: " << show(*cert.rho_achieved) << '\n';
  out << "triangles kept: " << fixed3(cert.triangle_fraction_kept.to_double()) << '\n'
      << "edges kept: " << fixed3(cert.edge_fraction_kept.to_double()) << '\n'
      << "certificate: " << (cert.passes ? "PASS" : "FAIL") << '\n';
  return kOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.subcommand) {
    case Subcommand::stats:
      return stats(cfg, out);
    case Subcommand::decompose:
      return decompose_cmd(cfg, out);
    case Subcommand::cluster:
      return cluster_cmd(cfg, out);
    case Subcommand::generate:
      return generate_cmd(cfg, out);
    case Subcommand::verify:
      return verify_cmd(cfg, out);
  }
  return kContractViolation;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand != Subcommand::generate && !config.output.empty()) {
      std::ostringstream buffer;
      const int status = dispatch(config, buffer);
      std::ofstream f(config.output);
      if (!f) throw InputError("cannot write '" + config.output + "'");
      f << buffer.str();
      return status;
    }
    return dispatch(config, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << '\n';
    return kContractViolation;
  }
}

}  // namespace knit::cli
