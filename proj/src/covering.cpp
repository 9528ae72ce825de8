#include "qd/covering.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qd {

CoveringType::CoveringType(int degree, int base_genus,
                           std::vector<FiberProfile> fibers)
    : degree_(degree), base_genus_(base_genus), fibers_(std::move(fibers)) {
  if (degree_ < 2)
    fail(ErrorCode::ParameterOutOfRange,
         "covering degree must be at least 2, got " + std::to_string(degree_));
  if (base_genus_ < 0)
    fail(ErrorCode::ParameterOutOfRange, "base genus must be non-negative");
  for (FiberProfile& fiber : fibers_) {
    if (fiber.base_order < -1)
      fail(ErrorCode::EntryBelowMinusOne,
           "fiber over order " + std::to_string(fiber.base_order));
    std::sort(fiber.ram_indices.begin(), fiber.ram_indices.end(),
              std::greater<int>());
    int total = 0;
    for (int e : fiber.ram_indices) {
      if (e < 1)
        fail(ErrorCode::ParameterOutOfRange, "ramification index below 1");
      total += e;
    }
    if (total != degree_)
      fail(ErrorCode::FiberMismatch,
           "fiber partition sums to " + std::to_string(total) +
               ", degree is " + std::to_string(degree_));
    if (fiber.base_order == 0 && !fiber.is_critical())
      fail(ErrorCode::ConventionViolation,
           "a marked point must carry at least one ramification point");
  }
  std::sort(fibers_.begin(), fibers_.end(),
            [](const FiberProfile& a, const FiberProfile& b) {
              if (a.base_order != b.base_order)
                return a.base_order > b.base_order;
              return a.ram_indices > b.ram_indices;
            });
}

CoveringType::PointCounts CoveringType::counts() const {
  PointCounts c;
  for (const FiberProfile& fiber : fibers_) {
    if (fiber.base_order == 0) {
      ++c.marked;
    } else if (!fiber.is_critical()) {
      ++c.regular_singular;
    } else if (fiber.base_order == -1) {
      ++c.critical_poles;
    } else {
      ++c.critical_zeros;
    }
  }
  return c;
}

int CoveringType::total_ramification() const {
  int total = 0;
  for (const FiberProfile& fiber : fibers_)
    for (int e : fiber.ram_indices) total += e - 1;
  return total;
}

int local_order(int k, int e) { return e * (k + 2) - 2; }

int covered_genus(const CoveringType& covering) {
  int rhs = covering.degree() * (2 * covering.base_genus() - 2) +
            covering.total_ramification();
  if (rhs % 2 != 0)
    fail(ErrorCode::NonIntegralGenus,
         "Riemann-Hurwitz gives odd 2g-2 = " + std::to_string(rhs));
  int genus = (rhs + 2) / 2;
  if (genus < 0)
    fail(ErrorCode::NegativeGenus,
         "Riemann-Hurwitz gives genus " + std::to_string(genus));
  return genus;
}

namespace {

void check_alignment(const CoveringType& covering,
                     const SingularityPattern& base) {
  std::vector<int> fiber_orders;
  fiber_orders.reserve(covering.fibers().size());
  for (const FiberProfile& fiber : covering.fibers())
    fiber_orders.push_back(fiber.base_order);
  std::sort(fiber_orders.begin(), fiber_orders.end(), std::greater<int>());
  if (fiber_orders != base.orders())
    fail(ErrorCode::FiberMismatch,
         "fiber base orders do not match the base pattern");
}

}  // namespace

SingularityPattern pullback_pattern(const CoveringType& covering,
                                    const SingularityPattern& base) {
  check_alignment(covering, base);
  std::vector<int> up;
  for (const FiberProfile& fiber : covering.fibers())
    for (int e : fiber.ram_indices) {
      int order = local_order(fiber.base_order, e);
      if (order != 0) up.push_back(order);  // no fake zeros upstairs
    }
  SingularityPattern target(std::move(up));
  int genus_up = covered_genus(covering);
  if (target.sum() != 4 * genus_up - 4)
    fail(ErrorCode::GaussBonnetMismatch,
         "pullback sums to " + std::to_string(target.sum()) +
             ", Riemann-Hurwitz genus wants " +
             std::to_string(4 * genus_up - 4));
  return target;
}

std::string_view to_string(SquareVerdict verdict) {
  switch (verdict) {
    case SquareVerdict::Yes: return "yes";
    case SquareVerdict::No: return "no";
    case SquareVerdict::Unknown: return "unknown";
  }
  return "?";
}

SquareVerdict pullback_is_square(const CoveringType& covering,
                                 const SingularityPattern& base) {
  check_alignment(covering, base);
  for (const FiberProfile& fiber : covering.fibers())
    for (int e : fiber.ram_indices)
      if (local_order(fiber.base_order, e) % 2 != 0) return SquareVerdict::No;
  if (covering.degree() == 2 && covering.base_genus() == 0) {
    // A degree-2 cover of the sphere is determined by its branch locus; the
    // pullback is a square exactly for the cover branched over the odd-order
    // singularities.
    for (const FiberProfile& fiber : covering.fibers()) {
      bool branched = fiber.is_critical();
      bool odd = fiber.base_order % 2 != 0;
      if (branched != odd) return SquareVerdict::No;
    }
    return SquareVerdict::Yes;
  }
  return SquareVerdict::Unknown;
}

int dimension_gap(const CoveringType& covering,
                  const SingularityPattern& base) {
  SingularityPattern target = pullback_pattern(covering, base);
  int genus_up = covered_genus(covering);
  int direct = (2 * genus_up + static_cast<int>(target.size()) - 2) -
               dimension(base);

  // Closed form: (d-1)(2g+n+m+p+r-2) minus unramified preimages of marked
  // points minus index-2 preimages of critical poles.
  auto c = covering.counts();
  int points = c.critical_zeros + c.marked + c.critical_poles +
               c.regular_singular;
  int closed = (covering.degree() - 1) *
               (2 * covering.base_genus() + points - 2);
  for (const FiberProfile& fiber : covering.fibers()) {
    if (fiber.base_order == 0) {
      for (int e : fiber.ram_indices)
        if (e == 1) --closed;
    } else if (fiber.base_order == -1 && fiber.is_critical()) {
      for (int e : fiber.ram_indices)
        if (e == 2) --closed;
    }
  }
  if (direct != closed)
    fail(ErrorCode::InternalFormulaMismatch,
         "dimension gap " + std::to_string(direct) + " direct vs " +
             std::to_string(closed) + " closed-form");
  return direct;
}

}  // namespace qd
