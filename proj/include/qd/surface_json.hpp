#pragma once

#include <string>

#include <json.hpp>

#include "qd/surface.hpp"

namespace qd {

// Surface file format:
//   {"faces":[{"edges":[{"id":"b","vec":["1/1","0/1"]}, ...]}, ...],
//    "pairings":[{"edges":["b","t"],"type":"translation"}, ...]}
// Rationals are "p/q" strings (bare integers accepted on input); pairings are
// written sorted by first edge id.
FlatSurface surface_from_json(const nlohmann::json& doc);
FlatSurface read_surface(const std::string& path);
nlohmann::ordered_json surface_to_json(const FlatSurface& surface);

}  // namespace qd
