#include "qd/surface_json.hpp"

#include <fstream>

namespace qd {

namespace {

Rational rational_from_json(const nlohmann::json& value) {
  if (value.is_number_integer())
    return Rational(value.get<long long>());
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  fail(ErrorCode::FileSchema, "rational must be a \"p/q\" string");
}

}  // namespace

FlatSurface surface_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("faces") || !doc.contains("pairings"))
      fail(ErrorCode::FileSchema,
           "surface document needs 'faces' and 'pairings'");
    std::vector<PlanarFace> faces;
    for (const auto& face_doc : doc.at("faces")) {
      PlanarFace face;
      for (const auto& edge_doc : face_doc.at("edges")) {
        const auto& vec = edge_doc.at("vec");
        if (!vec.is_array() || vec.size() != 2)
          fail(ErrorCode::FileSchema, "edge 'vec' must have two entries");
        face.edges.push_back({edge_doc.at("id").get<std::string>(),
                              Vec2{rational_from_json(vec[0]),
                                   rational_from_json(vec[1])}});
      }
      faces.push_back(std::move(face));
    }
    std::vector<EdgePairing> pairings;
    for (const auto& pairing_doc : doc.at("pairings")) {
      const auto& ids = pairing_doc.at("edges");
      if (!ids.is_array() || ids.size() != 2)
        fail(ErrorCode::FileSchema, "pairing 'edges' must have two entries");
      std::string type = pairing_doc.at("type").get<std::string>();
      GluingType gluing;
      if (type == "translation")
        gluing = GluingType::Translation;
      else if (type == "half_turn")
        gluing = GluingType::HalfTurn;
      else
        fail(ErrorCode::FileSchema, "unknown gluing type '" + type + "'");
      pairings.push_back(
          {ids[0].get<std::string>(), ids[1].get<std::string>(), gluing});
    }
    return FlatSurface(std::move(faces), std::move(pairings));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::FileSchema, e.what());
  }
}

FlatSurface read_surface(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::FileSchema, "cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::FileSchema, e.what());
  }
  return surface_from_json(doc);
}

nlohmann::ordered_json surface_to_json(const FlatSurface& surface) {
  nlohmann::ordered_json doc;
  doc["faces"] = nlohmann::ordered_json::array();
  for (const PlanarFace& face : surface.faces) {
    nlohmann::ordered_json face_doc;
    face_doc["edges"] = nlohmann::ordered_json::array();
    for (const DirectedEdge& edge : face.edges)
      face_doc["edges"].push_back({{"id", edge.id},
                                   {"vec", {edge.vec.x.to_string(),
                                            edge.vec.y.to_string()}}});
    doc["faces"].push_back(std::move(face_doc));
  }
  doc["pairings"] = nlohmann::ordered_json::array();
  for (const EdgePairing& pairing : surface.pairings)
    doc["pairings"].push_back(
        {{"edges", {pairing.first, pairing.second}},
         {"type", std::string(to_string(pairing.type))}});
  return doc;
}

}  // namespace qd
