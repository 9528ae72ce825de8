#include "qd/surface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace qd {

std::string_view to_string(GluingType type) {
  return type == GluingType::Translation ? "translation" : "half_turn";
}

FlatSurface::FlatSurface(std::vector<PlanarFace> faces_in,
                         std::vector<EdgePairing> pairings_in)
    : faces(std::move(faces_in)), pairings(std::move(pairings_in)) {
  for (EdgePairing& pairing : pairings)
    if (pairing.second < pairing.first) std::swap(pairing.first, pairing.second);
  std::sort(pairings.begin(), pairings.end(),
            [](const EdgePairing& a, const EdgePairing& b) {
              if (a.first != b.first) return a.first < b.first;
              return a.second < b.second;
            });
}

namespace {

// Location of a directed edge: face index and position along its boundary.
struct EdgeRef {
  int face = 0;
  int index = 0;
};

// Lookup structures shared by the analyzers. Built only on surfaces that
// passed validation.
struct SurfaceIndex {
  std::map<std::string, EdgeRef> by_id;
  std::map<std::string, std::string> partner;
  std::map<std::string, std::size_t> pairing_of;  // edge id -> pairing index

  static SurfaceIndex build(const FlatSurface& surface) {
    SurfaceIndex idx;
    for (int f = 0; f < static_cast<int>(surface.faces.size()); ++f) {
      const PlanarFace& face = surface.faces[f];
      for (int i = 0; i < static_cast<int>(face.edges.size()); ++i)
        idx.by_id[face.edges[i].id] = EdgeRef{f, i};
    }
    for (std::size_t p = 0; p < surface.pairings.size(); ++p) {
      const EdgePairing& pairing = surface.pairings[p];
      idx.partner[pairing.first] = pairing.second;
      idx.partner[pairing.second] = pairing.first;
      idx.pairing_of[pairing.first] = p;
      idx.pairing_of[pairing.second] = p;
    }
    return idx;
  }

  const DirectedEdge& edge(const FlatSurface& surface,
                           const std::string& id) const {
    EdgeRef ref = by_id.at(id);
    return surface.faces[ref.face].edges[ref.index];
  }
};

int crossing_sign(GluingType type) {
  return type == GluingType::Translation ? 1 : -1;
}

}  // namespace

std::vector<Violation> validate(const FlatSurface& surface) {
  std::vector<Violation> out;
  auto report = [&out](std::string message) {
    out.push_back({std::move(message)});
  };

  if (surface.faces.empty()) report("NoFaces: surface has no faces");

  std::map<std::string, int> id_count;
  for (std::size_t f = 0; f < surface.faces.size(); ++f) {
    const PlanarFace& face = surface.faces[f];
    if (face.edges.size() < 2)
      report("FaceTooSmall: face " + std::to_string(f) +
             " has fewer than 2 edges");
    Vec2 total{0, 0};
    for (const DirectedEdge& edge : face.edges) {
      if (edge.id.empty()) report("EmptyEdgeId: face " + std::to_string(f));
      ++id_count[edge.id];
      if (edge.vec.is_zero())
        report("ZeroVector: edge '" + edge.id + "'");
      total = total + edge.vec;
    }
    if (!total.is_zero())
      report("OpenBoundary: face " + std::to_string(f) +
             " edges do not sum to zero");
  }
  for (const auto& [id, count] : id_count)
    if (count > 1) report("DuplicateEdgeId: '" + id + "'");

  std::map<std::string, int> paired_count;
  for (const EdgePairing& pairing : surface.pairings) {
    if (pairing.first == pairing.second) {
      report("SelfPairedEdge: '" + pairing.first + "'");
      continue;
    }
    for (const std::string& id : {pairing.first, pairing.second}) {
      if (!id_count.count(id)) {
        report("UnknownEdge: pairing references '" + id + "'");
      }
      ++paired_count[id];
    }
  }
  for (const auto& [id, count] : paired_count)
    if (count > 1) report("EdgeInMultiplePairings: '" + id + "'");
  for (const auto& [id, count] : id_count)
    if (count == 1 && !paired_count.count(id))
      report("UnpairedEdge: '" + id + "'");

  if (!out.empty()) return out;  // vector/connectivity checks need structure

  SurfaceIndex idx = SurfaceIndex::build(surface);
  for (const EdgePairing& pairing : surface.pairings) {
    const Vec2& a = idx.edge(surface, pairing.first).vec;
    const Vec2& b = idx.edge(surface, pairing.second).vec;
    bool ok = pairing.type == GluingType::Translation ? (b == -a) : (b == a);
    if (!ok)
      report("VectorMismatch: pairing '" + pairing.first + "'-'" +
             pairing.second + "' (" + std::string(to_string(pairing.type)) +
             ")");
  }

  // Face adjacency connectivity.
  std::vector<int> component(surface.faces.size(), -1);
  std::vector<int> stack;
  int components = 0;
  for (std::size_t seed = 0; seed < surface.faces.size(); ++seed) {
    if (component[seed] != -1) continue;
    ++components;
    stack.push_back(static_cast<int>(seed));
    component[seed] = components;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (const DirectedEdge& edge : surface.faces[f].edges) {
        const std::string& other = idx.partner.at(edge.id);
        int of = idx.by_id.at(other).face;
        if (component[of] == -1) {
          component[of] = components;
          stack.push_back(of);
        }
      }
    }
  }
  if (components > 1)
    report("ComponentCount=" + std::to_string(components));
  return out;
}

void require_valid(const FlatSurface& surface) {
  std::vector<Violation> violations = validate(surface);
  if (violations.empty()) return;
  std::string message;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) message += "; ";
    message += violations[i].message;
  }
  fail(ErrorCode::InvalidSurface, message);
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTolerance = 1e-6;

// Counterclockwise angle at the corner before edge `index` of `face`:
// from the outgoing vector to the reversed incoming vector, in (0, 2pi].
double corner_angle(const PlanarFace& face, int index) {
  int n = static_cast<int>(face.edges.size());
  const Vec2& incoming = face.edges[(index + n - 1) % n].vec;
  const Vec2& outgoing = face.edges[index].vec;
  double from = std::atan2(outgoing.y.to_double(), outgoing.x.to_double());
  double to = std::atan2(-incoming.y.to_double(), -incoming.x.to_double());
  double angle = to - from;
  while (angle < 0) angle += 2 * kPi;
  while (angle >= 2 * kPi) angle -= 2 * kPi;
  if (angle < 1e-9) angle = 2 * kPi;  // a doubled-back boundary wraps fully
  return angle;
}

struct OrbitData {
  std::vector<VertexClass> classes;
  std::vector<std::vector<std::size_t>> loops;  // pairing crossings per class
};

OrbitData corner_orbits(const FlatSurface& surface) {
  SurfaceIndex idx = SurfaceIndex::build(surface);
  OrbitData data;
  std::set<std::pair<int, int>> seen;
  for (int f = 0; f < static_cast<int>(surface.faces.size()); ++f) {
    const PlanarFace& face = surface.faces[f];
    int n = static_cast<int>(face.edges.size());
    for (int i = 0; i < n; ++i) {
      if (seen.count({f, i})) continue;
      VertexClass vertex;
      std::vector<std::size_t> loop;
      double angle_sum = 0.0;
      int cf = f, ci = i;
      do {
        seen.insert({cf, ci});
        vertex.corners.push_back(Corner{cf, ci});
        angle_sum += corner_angle(surface.faces[cf], ci);
        const PlanarFace& cur = surface.faces[cf];
        int m = static_cast<int>(cur.edges.size());
        const std::string& incoming = cur.edges[(ci + m - 1) % m].id;
        loop.push_back(idx.pairing_of.at(incoming));
        EdgeRef next = idx.by_id.at(idx.partner.at(incoming));
        cf = next.face;
        ci = next.index;
      } while (!(cf == f && ci == i));
      double multiple = angle_sum / kPi;
      int rounded = static_cast<int>(std::lround(multiple));
      if (rounded < 1 || std::abs(angle_sum - rounded * kPi) > kAngleTolerance)
        fail(ErrorCode::AngleNotMultipleOfPi,
             "cone angle " + std::to_string(angle_sum) +
                 " is not an integer multiple of pi");
      vertex.angle_multiple = rounded;
      vertex.order = rounded - 2;
      data.classes.push_back(std::move(vertex));
      data.loops.push_back(std::move(loop));
    }
  }
  return data;
}

}  // namespace

std::vector<VertexClass> vertex_classes(const FlatSurface& surface) {
  require_valid(surface);
  return corner_orbits(surface).classes;
}

std::vector<std::size_t> corner_loop_crossings(const FlatSurface& surface,
                                               const VertexClass& vertex) {
  require_valid(surface);
  OrbitData data = corner_orbits(surface);
  for (std::size_t i = 0; i < data.classes.size(); ++i)
    if (!vertex.corners.empty() &&
        !data.classes[i].corners.empty() &&
        data.classes[i].corners.front() == vertex.corners.front())
      return data.loops[i];
  fail(ErrorCode::IndexOutOfRange, "vertex class not found on this surface");
}

SurfaceAnalysis analyze(const FlatSurface& surface) {
  require_valid(surface);
  SurfaceAnalysis analysis;
  analysis.classes = corner_orbits(surface).classes;

  std::vector<int> orders;
  orders.reserve(analysis.classes.size());
  for (const VertexClass& vertex : analysis.classes)
    orders.push_back(vertex.order);
  analysis.pattern = SingularityPattern(std::move(orders));

  int euler = static_cast<int>(analysis.classes.size()) -
              static_cast<int>(surface.pairings.size()) +
              static_cast<int>(surface.faces.size());
  if (euler % 2 != 0 || euler > 2)
    fail(ErrorCode::InvalidSurface,
         "Euler characteristic " + std::to_string(euler) +
             " is not that of a closed orientable surface");
  analysis.genus = (2 - euler) / 2;
  if (analysis.pattern.sum() != 4 * analysis.genus - 4)
    fail(ErrorCode::GaussBonnetMismatch,
         "orders sum to " + std::to_string(analysis.pattern.sum()) +
             ", genus wants " + std::to_string(4 * analysis.genus - 4));

  analysis.square = is_square(surface);
  return analysis;
}

SingularityPattern pattern_of(const FlatSurface& surface) {
  return analyze(surface).pattern;
}

int genus(const FlatSurface& surface) { return analyze(surface).genus; }

bool is_square(const FlatSurface& surface) {
  require_valid(surface);
  SurfaceIndex idx = SurfaceIndex::build(surface);

  // Propagate face signs over a spanning tree; any inconsistent pairing
  // witnesses a nontrivial holonomy character.
  std::vector<int> sign(surface.faces.size(), 0);
  std::vector<int> stack;
  sign[0] = 1;
  stack.push_back(0);
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (const DirectedEdge& edge : surface.faces[f].edges) {
      std::size_t p = idx.pairing_of.at(edge.id);
      int of = idx.by_id.at(idx.partner.at(edge.id)).face;
      int wanted = sign[f] * crossing_sign(surface.pairings[p].type);
      if (sign[of] == 0) {
        sign[of] = wanted;
        stack.push_back(of);
      } else if (sign[of] != wanted) {
        return false;
      }
    }
  }
  return true;
}

int loop_holonomy(const FlatSurface& surface,
                  std::span<const std::size_t> crossings) {
  require_valid(surface);
  if (crossings.empty()) return 1;
  SurfaceIndex idx = SurfaceIndex::build(surface);
  for (std::size_t p : crossings)
    if (p >= surface.pairings.size())
      fail(ErrorCode::IndexOutOfRange,
           "pairing index " + std::to_string(p) + " out of range");

  auto walk_closes = [&](int start) {
    int current = start;
    for (std::size_t p : crossings) {
      const EdgePairing& pairing = surface.pairings[p];
      int fa = idx.by_id.at(pairing.first).face;
      int fb = idx.by_id.at(pairing.second).face;
      if (current == fa)
        current = fb;
      else if (current == fb)
        current = fa;
      else
        return false;
    }
    return current == start;
  };
  // The first crossing may be entered from either of its two sides.
  int side_a = idx.by_id.at(surface.pairings[crossings.front()].first).face;
  int side_b = idx.by_id.at(surface.pairings[crossings.front()].second).face;
  if (!walk_closes(side_a) && !walk_closes(side_b))
    fail(ErrorCode::NotAClosedWalk,
         "crossing sequence is not a closed face-to-face walk");

  int sign = 1;
  for (std::size_t p : crossings)
    sign *= crossing_sign(surface.pairings[p].type);
  return sign;
}

}  // namespace qd
