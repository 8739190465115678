#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "knit/ratio.hpp"

namespace knit::cli {

enum class Subcommand { stats, decompose, cluster, generate, verify };
enum class ReportFormat { text, structured };

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kContractViolation = 2;

struct RunConfig {
  Subcommand subcommand = Subcommand::stats;
  std::string input;
  std::string output;  // empty: the output stream passed to run()
  /// Explicit epsilon; "auto" (tau / 4) when unset.
  std::optional<Ratio> epsilon;
  std::optional<std::size_t> k;
  ReportFormat format = ReportFormat::text;
  std::uint64_t seed = 0;

  // cluster
  std::string truth;  // default: <input>.truth when that file exists
  bool clean = false;

  // verify / decompose
  std::string family;      // family file read by verify
  std::string family_out;  // family file written by decompose
  std::optional<Ratio> rho;

  // generate
  std::string kind;
  std::vector<std::size_t> sizes;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t d = 0;
  std::size_t degree = 3;
  std::optional<Ratio> p;
  std::size_t noise = 0;
  std::string attachment = "single_clique_pendant";
};

/// Executes one subcommand. Reports go to `out` (or to config.output),
/// diagnostics to `err`. Returns one of the exit statuses above.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace knit::cli
