#include "knit/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <string>

#include "knit/errors.hpp"

namespace knit {
namespace {

[[noreturn]] void bad_line(std::string_view source, std::size_t line, const std::string& what) {
  throw InputError(std::string(source) + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool skippable(const std::vector<std::string_view>& toks) { return toks.empty() || toks.front().front() == '#'; }

std::int64_t parse_id(std::string_view tok, std::string_view source, std::size_t line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    bad_line(source, line, "'" + std::string(tok) + "' is not a vertex id");
  }
  if (v < 0) bad_line(source, line, "negative vertex id " + std::string(tok));
  if (v >= std::numeric_limits<VertexId>::max()) bad_line(source, line, "vertex id " + std::string(tok) + " too large");
  return v;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return in;
}

std::vector<VertexId> id_list(const std::vector<std::string_view>& toks, std::size_t from, std::string_view source,
                              std::size_t line) {
  std::vector<VertexId> out;
  for (std::size_t i = from; i < toks.size(); ++i) out.push_back(static_cast<VertexId>(parse_id(toks[i], source, line)));
  return out;
}

void write_ids(std::ostream& out, const std::vector<VertexId>& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
}

}  // namespace

EdgeList parse_edge_list(std::istream& in, std::string_view source) {
  EdgeList edges;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    const auto toks = tokens(line);
    if (skippable(toks)) continue;
    if (toks.size() != 2) bad_line(source, no, "expected two vertex ids, found " + std::to_string(toks.size()) + " fields");
    edges.push_back({parse_id(toks[0], source, no), parse_id(toks[1], source, no)});
  }
  return edges;
}

EdgeList read_edge_list(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_edge_list(in, path.string());
}

void write_edge_list(std::ostream& out, const EdgeList& edges) {
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

std::vector<std::vector<VertexId>> parse_family(std::istream& in, std::string_view source) {
  std::vector<std::vector<VertexId>> family;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    const auto toks = tokens(line);
    if (skippable(toks)) continue;
    family.push_back(id_list(toks, 0, source, no));
  }
  return family;
}

std::vector<std::vector<VertexId>> read_family(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_family(in, path.string());
}

void write_family(std::ostream& out, const std::vector<std::vector<VertexId>>& family) {
  for (const auto& set : family) {
    write_ids(out, set);
    out << '\n';
  }
}

GroundTruth parse_truth(std::istream& in, std::string_view source) {
  GroundTruth truth;
  bool seen_noise = false;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    auto toks = tokens(line);
    if (skippable(toks)) continue;
    if (toks.front().starts_with("B:")) {
      if (seen_noise) bad_line(source, no, "second 'B:' line");
      seen_noise = true;
      const auto rest = toks.front().substr(2);
      if (!rest.empty()) toks.front() = rest;
      truth.noise = id_list(toks, rest.empty() ? 1 : 0, source, no);
      continue;
    }
    if (seen_noise) bad_line(source, no, "clique line after the 'B:' line");
    truth.cliques.push_back(id_list(toks, 0, source, no));
  }
  if (!seen_noise) throw InputError(std::string(source) + ": missing 'B:' line");
  return truth;
}

GroundTruth read_truth(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_truth(in, path.string());
}

void write_truth(std::ostream& out, const GroundTruth& truth) {
  write_family(out, truth.cliques);
  out << "B:";
  for (VertexId v : truth.noise) out << ' ' << v;
  out << '\n';
}

}  // namespace knit
