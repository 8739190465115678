// Command-line front end: knit {stats,decompose,cluster,generate,verify}.
#include <CLI11.hpp>

#include <iostream>

#include "knit/cli.hpp"
#include "knit/errors.hpp"

namespace {

using knit::cli::ReportFormat;
using knit::cli::RunConfig;
using knit::cli::Subcommand;

struct Raw {
  std::string epsilon = "auto";
  std::string rho;
  std::string p;
  std::string format = "text";
  std::size_t k = 0;
};

void add_common(CLI::App* sub, RunConfig& cfg, Raw& raw) {
  sub->add_option("--input", cfg.input, "edge-list file");
  sub->add_option("--output", cfg.output, "write the report here instead of stdout");
  sub->add_option("--format", raw.format, "text or structured (JSON)")
      ->check(CLI::IsMember({"text", "structured"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tightly-knit family decomposition and planted-clique recovery"};
  app.require_subcommand(1);
  RunConfig cfg;
  Raw raw;

  auto* stats = app.add_subcommand("stats", "triangle and Jaccard density statistics");
  add_common(stats, cfg, raw);
  stats->add_option("--epsilon", raw.epsilon, "extra threshold for mu, as p/q");

  auto* decompose = app.add_subcommand("decompose", "build a tightly-knit family");
  add_common(decompose, cfg, raw);
  decompose->add_option("--epsilon", raw.epsilon, "p/q in (0, 1], or auto (tau / 4)");
  decompose->add_option("--family-out", cfg.family_out, "write the member sets here");

  auto* cluster = app.add_subcommand("cluster", "recover k planted cliques");
  add_common(cluster, cfg, raw);
  cluster->add_option("--k", raw.k, "number of clusters (default: from the ground-truth file)");
  cluster->add_option("--truth", cfg.truth, "ground-truth file (default: <input>.truth)");
  cluster->add_flag("--clean", cfg.clean, "run epsilon-cleaning between extractions");
  cluster->add_option("--epsilon", raw.epsilon, "cleaning threshold, p/q or auto");

  auto* generate = app.add_subcommand("generate", "write a synthetic graph");
  generate->add_option("--output", cfg.output, "edge-list file (default: stdout)");
  generate->add_option("--kind", cfg.kind, "generator family")
      ->required()
      ->check(CLI::IsMember({"union_of_cliques", "complete_tripartite", "bracelet", "clique_plus_sparse",
                             "blocks_plus_B", "triangles_plus_expander", "erdos_renyi", "threshold"}));
  generate->add_option("--seed", cfg.seed);
  generate->add_option("--sizes", cfg.sizes, "clique sizes")->delimiter(',');
  generate->add_option("--n", cfg.n);
  generate->add_option("--m", cfg.m);
  generate->add_option("--d", cfg.d);
  generate->add_option("--degree", cfg.degree);
  generate->add_option("--p", raw.p, "edge probability as p/q");
  generate->add_option("--k", raw.k, "number of planted cliques (threshold)");
  generate->add_option("--noise", cfg.noise, "size of the noise set B (threshold)");
  generate->add_option("--attachment", cfg.attachment, "isolated, single_clique_pendant or b_internal");

  auto* verify = app.add_subcommand("verify", "certify a family file against a graph");
  add_common(verify, cfg, raw);
  verify->add_option("--family", cfg.family, "family file")->required();
  verify->add_option("--rho", raw.rho, "certification level p/q (default: the level achieved)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? knit::cli::kOk : knit::cli::kInputError;
  }

  if (stats->parsed()) cfg.subcommand = Subcommand::stats;
  if (decompose->parsed()) cfg.subcommand = Subcommand::decompose;
  if (cluster->parsed()) cfg.subcommand = Subcommand::cluster;
  if (generate->parsed()) cfg.subcommand = Subcommand::generate;
  if (verify->parsed()) cfg.subcommand = Subcommand::verify;
  cfg.format = raw.format == "structured" ? ReportFormat::structured : ReportFormat::text;

  try {
    if (raw.epsilon != "auto") cfg.epsilon = knit::Ratio::parse(raw.epsilon);
    if (cfg.epsilon && (*cfg.epsilon <= knit::Ratio(0) || *cfg.epsilon > knit::Ratio(1))) {
      throw knit::InputError("--epsilon must lie in (0, 1]");
    }
    if (!raw.rho.empty()) cfg.rho = knit::Ratio::parse(raw.rho);
    if (!raw.p.empty()) cfg.p = knit::Ratio::parse(raw.p);
    if (raw.k > 0) cfg.k = raw.k;
  } catch (const knit::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return knit::cli::kInputError;
  }
  return knit::cli::run(cfg, std::cout, std::cerr);
}
