#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "knit/graph.hpp"

namespace knit {

// Shared text formats. Blank lines and lines whose first non-blank
// character is '#' are skipped everywhere. Parse errors are InputError
// with "<source>:<line>: " prefixed.

/// One edge per line: two whitespace-separated decimal vertex ids.
EdgeList parse_edge_list(std::istream& in, std::string_view source = "<input>");
EdgeList read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const EdgeList& edges);

/// One vertex set per line, ids whitespace-separated.
std::vector<std::vector<VertexId>> parse_family(std::istream& in, std::string_view source = "<input>");
std::vector<std::vector<VertexId>> read_family(const std::filesystem::path& path);
void write_family(std::ostream& out, const std::vector<std::vector<VertexId>>& family);

/// Threshold-graph sidecar: one line per planted clique, then a line
/// "B:" followed by the noise ids.
struct GroundTruth {
  std::vector<std::vector<VertexId>> cliques;
  std::vector<VertexId> noise;
};

GroundTruth parse_truth(std::istream& in, std::string_view source = "<input>");
GroundTruth read_truth(const std::filesystem::path& path);
void write_truth(std::ostream& out, const GroundTruth& truth);

}  // namespace knit
