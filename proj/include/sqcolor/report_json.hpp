#pragma once

#include "json.hpp"
#include "sqcolor/discharging.hpp"
#include "sqcolor/graph.hpp"

#include <vector>

namespace sqcolor {

// Discharging ledger as JSON: per-vertex charges as "p/q" strings, the
// donor -> recipient -> amount transfer list, and the happiness verdicts.
nlohmann::ordered_json weight_report_json(const Graph& g, const WeightReport& rep);

// Configuration hits as {prop, vertices, condition} objects.
nlohmann::ordered_json config_hits_json(const std::vector<ConfigHit>& hits);

} // namespace sqcolor
