#pragma once

#include <json.hpp>

#include "qd/classify.hpp"
#include "qd/stratum_map.hpp"
#include "qd/surface.hpp"
#include "qd/table.hpp"

namespace qd {

using Json = nlohmann::ordered_json;

Json render(const SingularityPattern& pattern);  // sorted integer array
Json render(const AbelianPattern& cover);
Json render(const ComponentReport& report);
Json render(const StratumMap& map);
Json render(const StratumTable& table);
Json render(const SurfaceAnalysis& analysis);

std::string render_markdown(const StratumTable& table);

}  // namespace qd
