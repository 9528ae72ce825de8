#pragma once

#include <string_view>
#include <vector>

#include "qd/classify.hpp"
#include "qd/covering.hpp"

namespace qd {

enum class MapTag {
  Hyperelliptic1,  // covered pattern {a,a,b,b}, branched over the poles
  Hyperelliptic2,  // covered pattern {a,a,c}, branched over poles + even zero
  Hyperelliptic3,  // covered pattern {c1,c2}, branched over everything
  Exceptional1,    // (0,0,-1^4)  -> (2,2)
  Exceptional2,    // (0,-1^4)    -> (-1,-1,2)
  Exceptional3,    // (-1^4)      -> (-1^4)
  CanonicalSquare,
  Other,
};

std::string_view to_string(MapTag tag);

// A stratum-to-stratum mapping induced by a ramified covering of fixed
// combinatorial type.
struct StratumMap {
  Stratum base;
  CoveringType covering;
  SingularityPattern target;
  int target_genus = 0;
  int base_dim = 0;
  int target_dim = 0;
  MapTag tag = MapTag::Other;

  friend bool operator==(const StratumMap&, const StratumMap&) = default;
};

struct SearchBounds {
  int max_degree = 6;
  int max_base_genus = 2;
  int max_order = 12;
  int max_points = 12;
  int min_degree = 2;
};

// The degree-2 covering realizing a hyperelliptic component. FamilyId names
// the covered-pattern shape: F4 branches over the 2g+2 poles, F3 over 2g+1
// poles and the even-order zero, F2 over every singularity.
StratumMap hyperelliptic_map(FamilyId family, int g, int k);

// Direct instantiation of every dimension-preserving covering construction
// within bounds: the three hyperelliptic families plus the maps into the
// strata (2,2), (-1,-1,2) and (-1,-1,-1,-1). Deduplicated (the degree-2
// boundary instances of the exceptional maps coincide with family members)
// and sorted by (degree, base genus, base pattern, profile).
std::vector<StratumMap> catalog(const SearchBounds& bounds);

// Exhaustive enumeration of covering types within bounds, pruned by the
// dimension-count inequality, filtered to dimension gap zero, non-empty base
// and target strata, and non-square pullback. Survivors are tagged by
// matching against the catalog. Output order as in catalog.
std::vector<StratumMap> search_dimension_preserving(const SearchBounds& bounds);

}  // namespace qd
