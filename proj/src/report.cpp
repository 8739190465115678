#include "knit/report.hpp"

namespace knit {
namespace {

Json ids(const std::vector<VertexId>& v) { return Json(v); }

}  // namespace

Json to_json(const InducedStats& s) {
  Json j;
  j["vertices"] = s.vertices;
  j["edges"] = s.edges;
  j["wedges"] = s.wedges;
  j["internal_triangles"] = s.internal_triangles;
  j["incident_triangles"] = s.incident_triangles;
  j["incident_edges"] = s.incident_edges;
  j["edge_density"] = s.edge_density.to_string();
  j["triangle_density"] = s.triangle_density.to_string();
  j["radius"] = s.radius ? Json(*s.radius) : Json("inf");
  return j;
}

Json to_json(const CleaningLog& log) {
  Json j;
  Json removed = Json::array();
  for (const auto& r : log.removed_edges) {
    Json e;
    e["u"] = r.u;
    e["v"] = r.v;
    e["jaccard"] = r.jaccard.to_string();
    e["wedges_destroyed"] = r.wedges_destroyed;
    e["triangles_destroyed"] = r.triangles_destroyed;
    removed.push_back(std::move(e));
  }
  j["removed_edges"] = std::move(removed);
  j["isolated_vertices_removed"] = ids(log.isolated_vertices_removed);
  j["wedges_destroyed"] = log.wedges_destroyed();
  j["triangles_destroyed"] = log.triangles_destroyed();
  return j;
}

Json to_json(const Cluster& c) {
  Json j;
  j["center"] = c.center;
  j["center_degree"] = c.center_degree;
  j["neighborhood"] = ids(c.neighborhood);
  j["top_theta"] = ids(c.top_theta);
  j["members"] = ids(c.members);
  Json theta = Json::array();
  for (const auto& [v, t] : c.theta) theta.push_back(Json::array({v, t}));
  j["theta"] = std::move(theta);
  j["center_in_top_theta"] = c.center_in_top_theta();
  j["stats"] = to_json(c.stats);
  j["frontier"] = ids(c.frontier);
  return j;
}

Json to_json(const TightlyKnitFamily& family) {
  const auto& r = family.report;
  Json j;
  j["epsilon"] = family.epsilon_used.to_string();
  Json input;
  input["vertices"] = r.input_vertices;
  input["edges"] = r.input_edges;
  input["triangles"] = r.input_census.triangles;
  input["wedges"] = r.input_census.wedges;
  input["triangle_density"] = r.input_census.triangle_density().to_string();
  j["input"] = std::move(input);
  Json phases = Json::array();
  for (std::size_t p = 0; p < r.cleaning.size(); ++p) {
    Json phase;
    phase["phase"] = p;
    if (p > 0) phase["extraction"] = to_json(family.clusters[p - 1]);
    phase["cleaning"] = to_json(r.cleaning[p]);
    phases.push_back(std::move(phase));
  }
  j["phases"] = std::move(phases);
  Json sets = Json::array();
  for (const auto& c : family.clusters) sets.push_back(ids(c.members));
  j["family"] = std::move(sets);
  j["unclustered"] = ids(r.unclustered);
  j["triangle_fraction_kept"] = r.triangle_fraction_kept.to_string();
  j["edge_fraction_kept"] = r.edge_fraction_kept.to_string();
  j["operations"] = r.operations;
  return j;
}

Json to_json(const FamilyCertificate& cert) {
  Json j;
  j["rho"] = to_string(cert.rho);
  Json clusters = Json::array();
  for (const auto& c : cert.clusters) {
    Json e = to_json(c.stats);
    e["passes"] = c.passes;
    clusters.push_back(std::move(e));
  }
  j["clusters"] = std::move(clusters);
  j["triangle_fraction_kept"] = cert.triangle_fraction_kept.to_string();
  j["edge_fraction_kept"] = cert.edge_fraction_kept.to_string();
  j["rho_achieved"] = cert.rho_achieved ? Json(cert.rho_achieved->to_string()) : Json(nullptr);
  j["passes"] = cert.passes;
  return j;
}

Json to_json(const ClusteringResult& result) {
  Json j;
  Json clusters = Json::array();
  for (const auto& c : result.clusters) {
    Json e;
    e["center"] = c.center;
    e["neighborhood"] = ids(c.neighborhood);
    e["members"] = ids(c.members);
    clusters.push_back(std::move(e));
  }
  j["clusters"] = std::move(clusters);
  if (result.score) {
    j["incorrectness"] = result.score->incorrectness;
    j["matching"] = result.score->matching;
  }
  return j;
}

}  // namespace knit
