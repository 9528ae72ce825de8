#pragma once

#include <array>
#include <string_view>

#include "qd/surface.hpp"

namespace qd {

// Monodromy of a double cover: one sheet-swap flag per pairing, aligned with
// the surface's canonical pairing order.
struct CoverSpec {
  std::vector<int> swaps;  // 0 or 1 per pairing
};

struct DoubleCoverResult {
  FlatSurface surface;
  bool connected = true;
};

// Two copies of every face; a pairing with swap flag c glues sheet 0 of its
// first edge to sheet c of its second. A disconnected result (trivial
// monodromy) is returned with the flag down rather than rejected.
DoubleCoverResult double_cover(const FlatSurface& surface,
                               const CoverSpec& spec);

// Swap flags of the holonomy character: after best-effort face-sign
// propagation over a spanning tree, exactly the sign-inconsistent pairings
// swap sheets. The resulting double cover is connected and carries a square.
// Errors with AlreadySquare when the character is trivial.
CoverSpec canonical_cover_spec(const FlatSurface& surface);

// Linear action on all edge vectors; matrix rows are (a b; c d), determinant
// must be positive. Pattern, genus and holonomy are preserved.
FlatSurface gl2_act(const FlatSurface& surface,
                    const std::array<Rational, 4>& matrix);

// Reference surfaces: "torus" (unit square), "pillowcase" (four poles on the
// sphere), "figure2" (one-cylinder genus-2 surface with two order-2 cone
// points and nontrivial holonomy).
FlatSurface example(std::string_view name);

}  // namespace qd
