#include "qd/surface_cover.hpp"

#include <algorithm>
#include <map>

namespace qd {

namespace {

std::string sheet_id(const std::string& id, int sheet) {
  return id + "#" + std::to_string(sheet);
}

void check_spec(const FlatSurface& surface, const CoverSpec& spec) {
  if (spec.swaps.size() != surface.pairings.size())
    fail(ErrorCode::ParameterOutOfRange,
         "cover spec has " + std::to_string(spec.swaps.size()) +
             " flags for " + std::to_string(surface.pairings.size()) +
             " pairings");
  for (int s : spec.swaps)
    if (s != 0 && s != 1)
      fail(ErrorCode::ParameterOutOfRange, "swap flags must be 0 or 1");
}

}  // namespace

DoubleCoverResult double_cover(const FlatSurface& surface,
                               const CoverSpec& spec) {
  require_valid(surface);
  check_spec(surface, spec);

  std::vector<PlanarFace> faces;
  faces.reserve(2 * surface.faces.size());
  for (int sheet = 0; sheet < 2; ++sheet)
    for (const PlanarFace& face : surface.faces) {
      PlanarFace copy;
      copy.edges.reserve(face.edges.size());
      for (const DirectedEdge& edge : face.edges)
        copy.edges.push_back({sheet_id(edge.id, sheet), edge.vec});
      faces.push_back(std::move(copy));
    }

  std::vector<EdgePairing> pairings;
  pairings.reserve(2 * surface.pairings.size());
  for (std::size_t p = 0; p < surface.pairings.size(); ++p) {
    const EdgePairing& pairing = surface.pairings[p];
    int swap = spec.swaps[p];
    pairings.push_back({sheet_id(pairing.first, 0),
                        sheet_id(pairing.second, swap), pairing.type});
    pairings.push_back({sheet_id(pairing.first, 1),
                        sheet_id(pairing.second, 1 - swap), pairing.type});
  }

  DoubleCoverResult result;
  result.surface = FlatSurface(std::move(faces), std::move(pairings));
  std::vector<Violation> violations = validate(result.surface);
  for (const Violation& violation : violations) {
    if (violation.message.rfind("ComponentCount=", 0) == 0)
      result.connected = false;
    else
      fail(ErrorCode::InvalidSurface,
           "double cover failed validation: " + violation.message);
  }
  return result;
}

CoverSpec canonical_cover_spec(const FlatSurface& surface) {
  require_valid(surface);

  std::map<std::string, int> face_of;
  for (int f = 0; f < static_cast<int>(surface.faces.size()); ++f)
    for (const DirectedEdge& edge : surface.faces[f].edges)
      face_of[edge.id] = f;

  // Best-effort signs over a BFS tree of the face adjacency graph.
  std::vector<int> sign(surface.faces.size(), 0);
  std::vector<int> queue;
  sign[0] = 1;
  queue.push_back(0);
  std::size_t head = 0;
  std::map<std::string, std::string> partner;
  for (const EdgePairing& pairing : surface.pairings) {
    partner[pairing.first] = pairing.second;
    partner[pairing.second] = pairing.first;
  }
  std::map<std::string, GluingType> type_of;
  for (const EdgePairing& pairing : surface.pairings) {
    type_of[pairing.first] = pairing.type;
    type_of[pairing.second] = pairing.type;
  }
  while (head < queue.size()) {
    int f = queue[head++];
    for (const DirectedEdge& edge : surface.faces[f].edges) {
      int of = face_of.at(partner.at(edge.id));
      if (sign[of] == 0) {
        int sigma = type_of.at(edge.id) == GluingType::Translation ? 1 : -1;
        sign[of] = sign[f] * sigma;
        queue.push_back(of);
      }
    }
  }

  CoverSpec spec;
  spec.swaps.reserve(surface.pairings.size());
  bool any = false;
  for (const EdgePairing& pairing : surface.pairings) {
    int fa = face_of.at(pairing.first);
    int fb = face_of.at(pairing.second);
    int sigma = pairing.type == GluingType::Translation ? 1 : -1;
    int swap = sign[fa] * sigma * sign[fb] == 1 ? 0 : 1;
    any = any || swap == 1;
    spec.swaps.push_back(swap);
  }
  if (!any)
    fail(ErrorCode::AlreadySquare,
         "holonomy character is trivial; the canonical cover would be two "
         "disjoint copies");
  return spec;
}

FlatSurface gl2_act(const FlatSurface& surface,
                    const std::array<Rational, 4>& matrix) {
  require_valid(surface);
  const Rational& a = matrix[0];
  const Rational& b = matrix[1];
  const Rational& c = matrix[2];
  const Rational& d = matrix[3];
  Rational det = a * d - b * c;
  if (!(Rational(0) < det))
    fail(ErrorCode::SingularMatrix,
         "matrix determinant " + det.to_string() + " is not positive");

  FlatSurface image = surface;
  for (PlanarFace& face : image.faces)
    for (DirectedEdge& edge : face.edges) {
      Vec2 v = edge.vec;
      edge.vec = Vec2{a * v.x + b * v.y, c * v.x + d * v.y};
    }
  return image;
}

FlatSurface example(std::string_view name) {
  const Rational half(1, 2);
  if (name == "torus") {
    PlanarFace face{{
        {"b", {1, 0}},
        {"r", {0, 1}},
        {"t", {-1, 0}},
        {"l", {0, -1}},
    }};
    return FlatSurface({face}, {{"b", "t", GluingType::Translation},
                                {"l", "r", GluingType::Translation}});
  }
  if (name == "pillowcase") {
    // A 1 x 1/2 box: top and bottom folded at their midpoints, sides glued
    // by translation. Four cone points of angle pi.
    PlanarFace face{{
        {"b1", {half, 0}},
        {"b2", {half, 0}},
        {"r", {0, half}},
        {"t1", {-half, 0}},
        {"t2", {-half, 0}},
        {"l", {0, -half}},
    }};
    return FlatSurface({face}, {{"b1", "b2", GluingType::HalfTurn},
                                {"t1", "t2", GluingType::HalfTurn},
                                {"l", "r", GluingType::Translation}});
  }
  if (name == "figure2") {
    // One horizontal cylinder of circumference 4: the second and fourth top
    // segments return by translation, the remaining pairs are centrally
    // symmetric within the bottom and within the top.
    PlanarFace face{{
        {"b1", {1, 0}},
        {"b2", {1, 0}},
        {"b3", {1, 0}},
        {"b4", {1, 0}},
        {"r", {0, 1}},
        {"t1", {-1, 0}},
        {"t2", {-1, 0}},
        {"t3", {-1, 0}},
        {"t4", {-1, 0}},
        {"l", {0, -1}},
    }};
    return FlatSurface({face}, {{"b1", "b3", GluingType::HalfTurn},
                                {"t1", "t3", GluingType::HalfTurn},
                                {"b2", "t2", GluingType::Translation},
                                {"b4", "t4", GluingType::Translation},
                                {"l", "r", GluingType::Translation}});
  }
  fail(ErrorCode::UnknownExample,
       "no example named '" + std::string(name) + "'");
}

}  // namespace qd
