#pragma once

#include <json.hpp>

#include "knit/decomposition.hpp"
#include "knit/metrics.hpp"
#include "knit/planted.hpp"

namespace knit {

// Structured reports. Keys keep insertion order and every rational is a
// "p/q" string, so dumps of equal inputs are byte-identical.
using Json = nlohmann::ordered_json;

Json to_json(const InducedStats& stats);
Json to_json(const CleaningLog& log);
Json to_json(const Cluster& cluster);
Json to_json(const TightlyKnitFamily& family);
Json to_json(const FamilyCertificate& cert);
Json to_json(const ClusteringResult& result);

}  // namespace knit
