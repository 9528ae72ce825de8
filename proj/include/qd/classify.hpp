#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qd/pattern.hpp"

namespace qd {

// The three series of strata whose hyperelliptic component is realized by a
// degree-2 covering of the sphere. Families are named by the shape of the
// covered pattern:
//   F4: {a,a,b,b} with a = 2(g-k)-3, b = 2k+1;     k >= -1, g >= 1, g-k >= 2
//   F3: {a,a,c}   with a = 2(g-k)-3, c = 4k+2;     k >= 0,  g >= 1, g-k >= 1
//   F2: {c1,c2}   with c1 = 4(g-k)-6, c2 = 4k+2;   k >= 0,  g >= 2, g-k >= 2
enum class FamilyId { F2, F3, F4 };

std::string_view to_string(FamilyId id);

struct FamilyMatch {
  FamilyId family;
  int g = 0;
  int k = 0;

  friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

// Shape-matches a zero-free pattern against the families, trying F4, then F3,
// then F2; within a family, the assignment with the larger leading entry is
// preferred. Marked points never match (no family contains an order-0 entry).
std::optional<FamilyMatch> hyperelliptic_family(
    const SingularityPattern& pattern);

enum class StratumStatus { Empty, Connected, TwoComponents };

enum class ComponentLabel {
  Unique,
  Hyperelliptic,
  Nonhyperelliptic,
  ExceptionalComponent1,
  ExceptionalComponent2,
};

std::string_view to_string(StratumStatus status);
std::string_view to_string(ComponentLabel label);

struct ComponentReport {
  Stratum stratum;  // marked points stripped
  StratumStatus status = StratumStatus::Empty;
  std::vector<ComponentLabel> components;
  std::optional<FamilyMatch> family;
  std::string source;  // which classification rule produced the verdict

  friend bool operator==(const ComponentReport&,
                         const ComponentReport&) = default;
};

// Connected-component classification. Marked points are stripped first, so
// the verdict is stable under adding or removing marked points.
ComponentReport classify(const SingularityPattern& pattern);

// All hyperelliptic family members at the given genus (g >= 3), deduplicated,
// in family order F2, F3, F4 with k increasing.
std::vector<Stratum> family_members(int genus);

}  // namespace qd
