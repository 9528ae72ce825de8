#include "qd/stratum_map.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace qd {

std::string_view to_string(MapTag tag) {
  switch (tag) {
    case MapTag::Hyperelliptic1: return "hyperelliptic_1";
    case MapTag::Hyperelliptic2: return "hyperelliptic_2";
    case MapTag::Hyperelliptic3: return "hyperelliptic_3";
    case MapTag::Exceptional1: return "exceptional_1";
    case MapTag::Exceptional2: return "exceptional_2";
    case MapTag::Exceptional3: return "exceptional_3";
    case MapTag::CanonicalSquare: return "canonical_square";
    case MapTag::Other: return "other";
  }
  return "?";
}

namespace {

StratumMap make_map(CoveringType covering, MapTag tag) {
  std::vector<int> base_orders;
  base_orders.reserve(covering.fibers().size());
  for (const FiberProfile& fiber : covering.fibers())
    base_orders.push_back(fiber.base_order);
  Stratum base = Stratum::of(SingularityPattern(std::move(base_orders)));
  SingularityPattern target = pullback_pattern(covering, base.pattern);
  int target_genus = covered_genus(covering);
  int base_dim = dimension(base);
  int target_dim = 2 * target_genus + static_cast<int>(target.size()) - 2;
  return StratumMap{std::move(base), std::move(covering), std::move(target),
                    target_genus,    base_dim,            target_dim,
                    tag};
}

std::vector<int> twos_and_ones(int twos, int ones) {
  std::vector<int> parts(static_cast<std::size_t>(twos), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
  return parts;
}

}  // namespace

StratumMap hyperelliptic_map(FamilyId family, int g, int k) {
  std::vector<FiberProfile> fibers;
  MapTag tag = MapTag::Other;
  switch (family) {
    case FamilyId::F4: {
      if (!(k >= -1 && g >= 1 && g - k >= 2))
        fail(ErrorCode::ParameterOutOfRange,
             "family F4 needs k >= -1, g >= 1, g-k >= 2");
      fibers.push_back({2 * (g - k) - 3, {1, 1}});
      fibers.push_back({2 * k + 1, {1, 1}});
      for (int i = 0; i < 2 * g + 2; ++i) fibers.push_back({-1, {2}});
      tag = MapTag::Hyperelliptic1;
      break;
    }
    case FamilyId::F3: {
      if (!(k >= 0 && g >= 1 && g - k >= 1))
        fail(ErrorCode::ParameterOutOfRange,
             "family F3 needs k >= 0, g >= 1, g-k >= 1");
      fibers.push_back({2 * (g - k) - 3, {1, 1}});
      fibers.push_back({2 * k, {2}});
      for (int i = 0; i < 2 * g + 1; ++i) fibers.push_back({-1, {2}});
      tag = MapTag::Hyperelliptic2;
      break;
    }
    case FamilyId::F2: {
      if (!(k >= 0 && g >= 2 && g - k >= 2))
        fail(ErrorCode::ParameterOutOfRange,
             "family F2 needs k >= 0, g >= 2, g-k >= 2");
      fibers.push_back({2 * g - 2 * k - 4, {2}});
      fibers.push_back({2 * k, {2}});
      for (int i = 0; i < 2 * g; ++i) fibers.push_back({-1, {2}});
      tag = MapTag::Hyperelliptic3;
      break;
    }
  }
  return make_map(CoveringType(2, 0, std::move(fibers)), tag);
}

namespace {

bool covering_less(const CoveringType& a, const CoveringType& b) {
  return a < b;
}

// All covering types mapping (-1,-1,-1,-1) to itself at the given degree:
// every fiber partitions the degree into 1s and 2s with four 1s in total (one
// upstairs pole apiece). Odd degree forces one 1 per fiber; even degree
// leaves two ways to spread the four 1s.
std::vector<CoveringType> pole_preserving_covers(int degree) {
  std::vector<CoveringType> out;
  auto build = [degree](const std::vector<int>& ones_per_fiber) {
    std::vector<FiberProfile> fibers;
    for (int ones : ones_per_fiber)
      fibers.push_back({-1, twos_and_ones((degree - ones) / 2, ones)});
    return CoveringType(degree, 0, std::move(fibers));
  };
  if (degree % 2 == 1) {
    out.push_back(build({1, 1, 1, 1}));
  } else {
    out.push_back(build({2, 2, 0, 0}));
    if (degree >= 4) out.push_back(build({4, 0, 0, 0}));
  }
  return out;
}

void append_exceptional(int degree, std::vector<StratumMap>& out,
                        const SearchBounds& bounds) {
  // (0,0,-1^4) -> (2,2): one simple ramification over each marked point, all
  // pole fibers fully branched. Even degree only.
  if (degree % 2 == 0 && bounds.max_points >= 6) {
    std::vector<FiberProfile> fibers;
    fibers.push_back({0, twos_and_ones(1, degree - 2)});
    fibers.push_back({0, twos_and_ones(1, degree - 2)});
    for (int i = 0; i < 4; ++i)
      fibers.push_back({-1, twos_and_ones(degree / 2, 0)});
    out.push_back(
        make_map(CoveringType(degree, 0, std::move(fibers)),
                 MapTag::Exceptional1));
  }
  // (0,-1^4) -> (-1,-1,2): as above but one pole fiber keeps two unramified
  // points. Even degree only.
  if (degree % 2 == 0 && bounds.max_points >= 5) {
    std::vector<FiberProfile> fibers;
    fibers.push_back({0, twos_and_ones(1, degree - 2)});
    fibers.push_back({-1, twos_and_ones((degree - 2) / 2, 2)});
    for (int i = 0; i < 3; ++i)
      fibers.push_back({-1, twos_and_ones(degree / 2, 0)});
    out.push_back(
        make_map(CoveringType(degree, 0, std::move(fibers)),
                 MapTag::Exceptional2));
  }
  // (-1^4) -> (-1^4), all degrees.
  if (bounds.max_points >= 4) {
    for (CoveringType& cov : pole_preserving_covers(degree))
      out.push_back(make_map(std::move(cov), MapTag::Exceptional3));
  }
}

void check_bounds(const SearchBounds& bounds) {
  if (bounds.max_degree < 2 || bounds.min_degree < 2 ||
      bounds.min_degree > bounds.max_degree || bounds.max_base_genus < 0 ||
      bounds.max_order < 1 || bounds.max_points < 4)
    fail(ErrorCode::BoundsTooSmall,
         "bounds must admit degree 2, genus 0 and four poles");
}

}  // namespace

std::vector<StratumMap> catalog(const SearchBounds& bounds) {
  check_bounds(bounds);
  std::vector<StratumMap> out;

  if (bounds.min_degree <= 2) {
    // Family items; base pattern sizes are 2g+4, 2g+3, 2g+2.
    for (int g = 1; 2 * g + 4 <= bounds.max_points; ++g)
      for (int k = -1; k <= g - 2; ++k)
        if (2 * (g - k) - 3 <= bounds.max_order &&
            2 * k + 1 <= bounds.max_order)
          out.push_back(hyperelliptic_map(FamilyId::F4, g, k));
    for (int g = 1; 2 * g + 3 <= bounds.max_points; ++g)
      for (int k = 0; k <= g - 1; ++k)
        if (2 * (g - k) - 3 <= bounds.max_order &&
            2 * k <= bounds.max_order)
          out.push_back(hyperelliptic_map(FamilyId::F3, g, k));
    for (int g = 2; 2 * g + 2 <= bounds.max_points; ++g)
      for (int k = 0; k <= g - 2; ++k)
        if (2 * g - 2 * k - 4 <= bounds.max_order &&
            2 * k <= bounds.max_order)
          out.push_back(hyperelliptic_map(FamilyId::F2, g, k));
  }
  for (int degree = bounds.min_degree; degree <= bounds.max_degree; ++degree)
    append_exceptional(degree, out, bounds);

  // The degree-2 exceptional instances coincide with family boundary cases;
  // keep the first (family) copy.
  std::vector<StratumMap> dedup;
  for (StratumMap& map : out) {
    bool seen = false;
    for (const StratumMap& kept : dedup)
      if (kept.covering == map.covering) {
        seen = true;
        break;
      }
    if (!seen) dedup.push_back(std::move(map));
  }
  std::sort(dedup.begin(), dedup.end(),
            [](const StratumMap& a, const StratumMap& b) {
              return covering_less(a.covering, b.covering);
            });
  return dedup;
}

namespace {

struct PartitionChoice {
  std::vector<int> parts;  // non-increasing
  int weight = 0;          // contribution to the dimension-count equation
  int ramification = 0;    // sum of (e - 1)
};

void list_partitions(int total, int max_part, std::vector<int>& prefix,
                     std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(total, max_part); part >= 1; --part) {
    prefix.push_back(part);
    list_partitions(total - part, part, prefix, out);
    prefix.pop_back();
  }
}

// Per-fiber weight so that "dimension gap zero" becomes
// (d-1)(2g-2) + sum of weights = 0. Zeros and non-critical fibers always
// weigh d-1; marked fibers lose one per unramified preimage; critical pole
// fibers lose one per index-2 preimage.
int fiber_weight(int degree, int base_order, const std::vector<int>& parts) {
  int w = degree - 1;
  bool critical = parts.front() > 1;
  if (base_order == 0) {
    for (int e : parts)
      if (e == 1) --w;
  } else if (base_order == -1 && critical) {
    for (int e : parts)
      if (e == 2) --w;
  }
  return w;
}

struct Group {
  int value = 0;
  int multiplicity = 0;
  const std::vector<PartitionChoice>* choices = nullptr;
  int min_weight = 0;
  int max_weight = 0;
};

// Base patterns for the search: zero-free strata with marked points added.
std::vector<SingularityPattern> base_patterns(int genus, int max_points,
                                              int max_order) {
  std::vector<SingularityPattern> out;
  for (int marked = 0; marked <= max_points; ++marked) {
    std::vector<SingularityPattern> bare =
        enumerate_strata(genus, std::max(1, max_points - marked), max_order);
    if (genus == 1) bare.insert(bare.begin(), SingularityPattern());
    for (const SingularityPattern& pattern : bare) {
      if (static_cast<int>(pattern.size()) + marked > max_points) continue;
      std::vector<int> orders = pattern.orders();
      orders.insert(orders.end(), marked, 0);
      out.emplace_back(std::move(orders));
    }
  }
  return out;
}

}  // namespace

std::vector<StratumMap> search_dimension_preserving(
    const SearchBounds& bounds) {
  check_bounds(bounds);

  std::map<CoveringType, MapTag> oracle;
  for (const StratumMap& map : catalog(bounds)) oracle.emplace(map.covering, map.tag);

  std::vector<StratumMap> found;
  for (int degree = bounds.min_degree; degree <= bounds.max_degree; ++degree) {
    std::vector<std::vector<int>> raw;
    std::vector<int> prefix;
    list_partitions(degree, degree, prefix, raw);

    std::vector<PartitionChoice> zero_choices, marked_choices, pole_choices;
    for (const std::vector<int>& parts : raw) {
      int ram = 0;
      for (int e : parts) ram += e - 1;
      zero_choices.push_back({parts, fiber_weight(degree, 1, parts), ram});
      pole_choices.push_back({parts, fiber_weight(degree, -1, parts), ram});
      if (parts.front() > 1)
        marked_choices.push_back({parts, fiber_weight(degree, 0, parts), ram});
    }
    auto weight_range = [](const std::vector<PartitionChoice>& choices) {
      int lo = choices.front().weight, hi = choices.front().weight;
      for (const PartitionChoice& c : choices) {
        lo = std::min(lo, c.weight);
        hi = std::max(hi, c.weight);
      }
      return std::pair<int, int>(lo, hi);
    };
    auto [zero_lo, zero_hi] = weight_range(zero_choices);
    auto [marked_lo, marked_hi] = weight_range(marked_choices);
    auto [pole_lo, pole_hi] = weight_range(pole_choices);

    for (int g = 0; g <= bounds.max_base_genus; ++g) {
      int target_weight = (degree - 1) * (2 - 2 * g);
      for (const SingularityPattern& base :
           base_patterns(g, bounds.max_points, bounds.max_order)) {
        int zeros = 0, marked = 0, poles = 0;
        for (int k : base.orders()) {
          if (k > 0) ++zeros;
          else if (k == 0) ++marked;
          else ++poles;
        }
        // Weakened inequality, maximized over the number of critical poles:
        // 2(d-1)(2g-2+Z+P) + 2M <= P*d is necessary for a zero gap.
        if (2 * (degree - 1) * (2 * g - 2 + zeros + poles) + 2 * marked >
            poles * degree)
          continue;
        if (is_empty(base)) continue;

        std::vector<Group> groups;
        {
          const auto& orders = base.orders();
          for (std::size_t i = 0; i < orders.size();) {
            std::size_t j = i;
            while (j < orders.size() && orders[j] == orders[i]) ++j;
            Group group;
            group.value = orders[i];
            group.multiplicity = static_cast<int>(j - i);
            if (orders[i] > 0) {
              group.choices = &zero_choices;
              group.min_weight = zero_lo;
              group.max_weight = zero_hi;
            } else if (orders[i] == 0) {
              group.choices = &marked_choices;
              group.min_weight = marked_lo;
              group.max_weight = marked_hi;
            } else {
              group.choices = &pole_choices;
              group.min_weight = pole_lo;
              group.max_weight = pole_hi;
            }
            groups.push_back(group);
            i = j;
          }
        }
        std::vector<int> suffix_min(groups.size() + 1, 0);
        std::vector<int> suffix_max(groups.size() + 1, 0);
        for (std::size_t i = groups.size(); i-- > 0;) {
          suffix_min[i] =
              suffix_min[i + 1] + groups[i].multiplicity * groups[i].min_weight;
          suffix_max[i] =
              suffix_max[i + 1] + groups[i].multiplicity * groups[i].max_weight;
        }

        std::vector<std::vector<int>> chosen(groups.size());
        auto emit = [&]() {
          std::vector<FiberProfile> fibers;
          int total_ram = 0;
          for (std::size_t gi = 0; gi < groups.size(); ++gi)
            for (int idx : chosen[gi]) {
              const PartitionChoice& c = (*groups[gi].choices)[idx];
              fibers.push_back({groups[gi].value, c.parts});
              total_ram += c.ramification;
            }
          int rhs = degree * (2 * g - 2) + total_ram;
          if (rhs % 2 != 0 || rhs < -2) return;  // Riemann-Hurwitz rejects

          CoveringType covering(degree, g, std::move(fibers));
          if (dimension_gap(covering, base) != 0) return;
          SingularityPattern target = pullback_pattern(covering, base);
          if (is_empty(target)) return;
          if (pullback_is_square(covering, base) == SquareVerdict::Yes) return;

          auto it = oracle.find(covering);
          MapTag tag = it != oracle.end() ? it->second : MapTag::Other;
          found.push_back(make_map(std::move(covering), tag));
        };

        // Depth-first multiset assignment of one partition per fiber, with a
        // weight window prune against the remaining groups.
        std::function<void(std::size_t, int, int, int)> assign =
            [&](std::size_t gi, int slot, int min_idx, int weight) {
              if (gi == groups.size()) {
                if (weight == target_weight) emit();
                return;
              }
              const Group& group = groups[gi];
              if (slot == group.multiplicity) {
                assign(gi + 1, 0, 0, weight);
                return;
              }
              int rem_here = group.multiplicity - slot - 1;
              for (std::size_t idx = static_cast<std::size_t>(min_idx);
                   idx < group.choices->size(); ++idx) {
                int w = weight + (*group.choices)[idx].weight;
                int lo = w + rem_here * group.min_weight + suffix_min[gi + 1];
                int hi = w + rem_here * group.max_weight + suffix_max[gi + 1];
                if (lo > target_weight || hi < target_weight) continue;
                chosen[gi].push_back(static_cast<int>(idx));
                assign(gi, slot + 1, static_cast<int>(idx), w);
                chosen[gi].pop_back();
              }
            };
        assign(0, 0, 0, 0);
      }
    }
  }

  std::sort(found.begin(), found.end(),
            [](const StratumMap& a, const StratumMap& b) {
              return covering_less(a.covering, b.covering);
            });
  return found;
}

}  // namespace qd
