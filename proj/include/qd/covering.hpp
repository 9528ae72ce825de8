#pragma once

#include <vector>

#include "qd/pattern.hpp"

namespace qd {

// Ramification data over one base point: the point's singularity order and
// the partition of the covering degree by ramification indices. A fiber is
// critical when some index exceeds 1; marked base points (order 0) must be
// critical.
struct FiberProfile {
  int base_order = -1;
  std::vector<int> ram_indices;  // non-increasing partition of the degree

  bool is_critical() const {
    return !ram_indices.empty() && ram_indices.front() > 1;
  }

  friend bool operator==(const FiberProfile&, const FiberProfile&) = default;
  friend auto operator<=>(const FiberProfile&, const FiberProfile&) = default;
};

// Combinatorial type of a ramified covering: degree, base genus, and one
// fiber profile per singular/marked base point. Non-critical singular values
// carry the trivial partition 1^d explicitly.
class CoveringType {
 public:
  CoveringType(int degree, int base_genus, std::vector<FiberProfile> fibers);

  int degree() const { return degree_; }
  int base_genus() const { return base_genus_; }
  const std::vector<FiberProfile>& fibers() const { return fibers_; }

  // Point counts entering the dimension bookkeeping: critical true zeros,
  // marked points, critical simple poles, non-critical singular values.
  struct PointCounts {
    int critical_zeros = 0;
    int marked = 0;
    int critical_poles = 0;
    int regular_singular = 0;
  };
  PointCounts counts() const;

  int total_ramification() const;  // sum of (e - 1) over all indices

  friend bool operator==(const CoveringType&, const CoveringType&) = default;
  friend auto operator<=>(const CoveringType&, const CoveringType&) = default;

 private:
  int degree_ = 2;
  int base_genus_ = 0;
  std::vector<FiberProfile> fibers_;  // canonical: (order desc, partition desc)
};

// Order transformation under a covering: a point of ramification index e over
// a singularity of order k carries order e*(k+2) - 2 upstairs.
int local_order(int k, int e);

// Genus of the covering surface from Riemann-Hurwitz; errors rather than
// rounding when 2g-2 upstairs comes out odd or below -2.
int covered_genus(const CoveringType& covering);

// Singularity pattern of the pulled-back differential. Fibers must align
// one-to-one with the base pattern entries (as multisets of orders). Order-0
// preimages are dropped: the pullback carries no marked points.
SingularityPattern pullback_pattern(const CoveringType& covering,
                                    const SingularityPattern& base);

enum class SquareVerdict { Yes, No, Unknown };

std::string_view to_string(SquareVerdict verdict);

// Decides whether the pulled-back differential is a global square of an
// Abelian differential. Any odd order upstairs gives No. For degree-2 covers
// of the sphere the branch locus decides exactly: Yes iff it equals the set
// of odd-order base singularities (the canonical double cover). Otherwise
// Unknown: monodromy data beyond the combinatorial type would be needed.
SquareVerdict pullback_is_square(const CoveringType& covering,
                                 const SingularityPattern& base);

// dim(target stratum) - dim(base stratum), computed both directly and by the
// closed-form ramification count; disagreement raises
// InternalFormulaMismatch.
int dimension_gap(const CoveringType& covering,
                  const SingularityPattern& base);

}  // namespace qd
