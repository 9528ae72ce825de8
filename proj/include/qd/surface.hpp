#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qd/pattern.hpp"
#include "qd/rational.hpp"

namespace qd {

struct Vec2 {
  Rational x;
  Rational y;

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  friend Vec2 operator+(const Vec2& a, const Vec2& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) {
    return {a.x - b.x, a.y - b.y};
  }
  Vec2 operator-() const { return {-x, -y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct DirectedEdge {
  std::string id;
  Vec2 vec;
};

// One polygonal face, edges listed along the counterclockwise boundary.
// Faces need not be simple polygons; only closure and nonzero edges are
// required.
struct PlanarFace {
  std::vector<DirectedEdge> edges;
};

enum class GluingType { Translation, HalfTurn };

std::string_view to_string(GluingType type);

// Identification of two boundary edges. Read along their faces' boundary
// orientations, a translation gluing requires opposite vectors, a half-turn
// gluing equal vectors. The crossing sign is +1 for translations and -1 for
// half-turns.
struct EdgePairing {
  std::string first;
  std::string second;
  GluingType type = GluingType::Translation;
};

// Polygons plus a perfect matching of their edges. Pairings are kept
// canonical: ids sorted within each pairing, pairings sorted by first id;
// cover specs and crossing sequences refer to pairings by their index in
// this order.
struct FlatSurface {
  std::vector<PlanarFace> faces;
  std::vector<EdgePairing> pairings;

  FlatSurface() = default;
  FlatSurface(std::vector<PlanarFace> faces, std::vector<EdgePairing> pairings);
};

struct Violation {
  std::string message;
};

// Structural checks: unique nonempty ids, face closure, nonzero vectors,
// perfect matching, gluing vector relations, connectivity. Violations are
// reported as data; nothing throws here.
std::vector<Violation> validate(const FlatSurface& surface);

// Throws InvalidSurface when validate() reports anything.
void require_valid(const FlatSurface& surface);

// A corner is the vertex wedge preceding one directed edge: corner (f, i)
// sits between edges i-1 and i of face f.
struct Corner {
  int face = 0;
  int index = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
};

struct VertexClass {
  std::vector<Corner> corners;  // in orbit order, starting at the first seen
  int angle_multiple = 0;       // total cone angle is angle_multiple * pi
  int order = 0;                // angle_multiple - 2
};

// Groups corners into cone points. Walking around a vertex: from the corner
// before edge e, cross the incoming edge (the one before e) to its partner p;
// the next corner is the one before p. Corner angles are measured from the
// outgoing vector v counterclockwise to the reversed incoming vector -u, in
// (0, 2pi]; class sums must land within 1e-6 of an integer multiple of pi.
std::vector<VertexClass> vertex_classes(const FlatSurface& surface);

// Multiset of cone-point orders, marked points included as 0 entries.
SingularityPattern pattern_of(const FlatSurface& surface);

// From the Euler characteristic of the glued cell complex.
int genus(const FlatSurface& surface);

// Whether the induced quadratic differential is globally the square of an
// Abelian differential: true iff faces admit signs making every crossing
// sign +1, decided by spanning-tree propagation.
bool is_square(const FlatSurface& surface);

// Holonomy sign of a closed face-to-face walk crossing the given pairings in
// order. The walk starts in the face containing the first pairing's first
// edge and must return to it.
int loop_holonomy(const FlatSurface& surface,
                  std::span<const std::size_t> crossings);

// The crossing sequence of the loop around a vertex class, suitable for
// loop_holonomy; its holonomy is (-1)^order.
std::vector<std::size_t> corner_loop_crossings(const FlatSurface& surface,
                                               const VertexClass& vertex);

// Everything the analyzers compute, in one pass.
struct SurfaceAnalysis {
  std::vector<VertexClass> classes;
  SingularityPattern pattern;
  int genus = 0;
  bool square = false;
};

SurfaceAnalysis analyze(const FlatSurface& surface);

}  // namespace qd
