#include "qd/classify.hpp"

#include <algorithm>

namespace qd {

std::string_view to_string(FamilyId id) {
  switch (id) {
    case FamilyId::F2: return "F2";
    case FamilyId::F3: return "F3";
    case FamilyId::F4: return "F4";
  }
  return "?";
}

std::string_view to_string(StratumStatus status) {
  switch (status) {
    case StratumStatus::Empty: return "empty";
    case StratumStatus::Connected: return "connected";
    case StratumStatus::TwoComponents: return "two_components";
  }
  return "?";
}

std::string_view to_string(ComponentLabel label) {
  switch (label) {
    case ComponentLabel::Unique: return "unique";
    case ComponentLabel::Hyperelliptic: return "hyperelliptic";
    case ComponentLabel::Nonhyperelliptic: return "nonhyperelliptic";
    case ComponentLabel::ExceptionalComponent1: return "exceptional_component_1";
    case ComponentLabel::ExceptionalComponent2: return "exceptional_component_2";
  }
  return "?";
}

namespace {

std::optional<FamilyMatch> match_f4(int a, int b) {
  // a = 2(g-k)-3, b = 2k+1 with k >= -1, g >= 1, g-k >= 2.
  if (a % 2 == 0 || b % 2 == 0) return std::nullopt;
  int g_minus_k_times_2 = a + 3;  // = 2(g-k)
  if (g_minus_k_times_2 % 2 != 0) return std::nullopt;
  int gk = g_minus_k_times_2 / 2;
  int k = (b - 1) / 2;  // b odd, exact
  if (b < -1) return std::nullopt;
  int g = gk + k;
  if (k >= -1 && g >= 1 && gk >= 2)
    return FamilyMatch{FamilyId::F4, g, k};
  return std::nullopt;
}

std::optional<FamilyMatch> match_f3(int a, int c) {
  // a = 2(g-k)-3, c = 4k+2 with k >= 0, g >= 1, g-k >= 1.
  if (a % 2 == 0) return std::nullopt;
  if (c < 2 || (c - 2) % 4 != 0) return std::nullopt;
  int gk = (a + 3) / 2;
  int k = (c - 2) / 4;
  int g = gk + k;
  if (k >= 0 && g >= 1 && gk >= 1)
    return FamilyMatch{FamilyId::F3, g, k};
  return std::nullopt;
}

std::optional<FamilyMatch> match_f2(int c1, int c2) {
  // c1 = 4(g-k)-6, c2 = 4k+2 with k >= 0, g >= 2, g-k >= 2.
  if (c1 < 2 || (c1 + 6) % 4 != 0) return std::nullopt;
  if (c2 < 2 || (c2 - 2) % 4 != 0) return std::nullopt;
  int gk = (c1 + 6) / 4;
  int k = (c2 - 2) / 4;
  int g = gk + k;
  if (k >= 0 && g >= 2 && gk >= 2)
    return FamilyMatch{FamilyId::F2, g, k};
  return std::nullopt;
}

}  // namespace

std::optional<FamilyMatch> hyperelliptic_family(
    const SingularityPattern& pattern) {
  const auto& o = pattern.orders();
  if (o.size() == 4) {
    // F4 needs the shape {a,a,b,b}; try the larger value as `a` first.
    if (o[0] == o[1] && o[2] == o[3]) {
      if (auto m = match_f4(o[0], o[2])) return m;
      if (auto m = match_f4(o[2], o[0])) return m;
    }
  }
  if (o.size() == 3) {
    if (o[0] == o[1]) {
      if (auto m = match_f3(o[0], o[2])) return m;
    }
    if (o[1] == o[2]) {
      if (auto m = match_f3(o[1], o[0])) return m;
    }
  }
  if (o.size() == 2) {
    if (auto m = match_f2(o[0], o[1])) return m;
    if (auto m = match_f2(o[1], o[0])) return m;
  }
  return std::nullopt;
}

namespace {

const std::vector<std::vector<int>> kGenus2Coinciding = {
    {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};

const std::vector<std::vector<int>> kExceptionalStrata = {
    {9, -1}, {6, 3, -1}, {3, 3, 3, -1}, {12}};

}  // namespace

ComponentReport classify(const SingularityPattern& pattern) {
  SingularityPattern bare = strip_marked(pattern);
  ComponentReport report;
  report.stratum = Stratum::of(bare);

  if (is_empty(bare)) {
    report.status = StratumStatus::Empty;
    report.source = "emptiness-table";
    return report;
  }

  int g = report.stratum.genus;
  if (g == 0) {
    report.status = StratumStatus::Connected;
    report.components = {ComponentLabel::Unique};
    report.source = "genus0-connected";
    return report;
  }
  if (g == 1) {
    report.status = StratumStatus::Connected;
    if (auto family = hyperelliptic_family(bare)) {
      report.components = {ComponentLabel::Hyperelliptic};
      report.family = family;
      report.source = "coinciding-hyperelliptic";
    } else {
      report.components = {ComponentLabel::Unique};
      report.source = "genus1-connected";
    }
    return report;
  }

  if (auto family = hyperelliptic_family(bare)) {
    report.family = family;
    bool coinciding =
        std::find(kGenus2Coinciding.begin(), kGenus2Coinciding.end(),
                  bare.orders()) != kGenus2Coinciding.end();
    if (coinciding) {
      report.status = StratumStatus::Connected;
      report.components = {ComponentLabel::Hyperelliptic};
      report.source = "coinciding-hyperelliptic";
    } else {
      report.status = StratumStatus::TwoComponents;
      report.components = {ComponentLabel::Hyperelliptic,
                           ComponentLabel::Nonhyperelliptic};
      report.source = "hyperelliptic-family-split";
    }
    return report;
  }

  if (std::find(kExceptionalStrata.begin(), kExceptionalStrata.end(),
                bare.orders()) != kExceptionalStrata.end()) {
    report.status = StratumStatus::TwoComponents;
    report.components = {ComponentLabel::ExceptionalComponent1,
                         ComponentLabel::ExceptionalComponent2};
    report.source = "low-genus-exceptional";
    return report;
  }

  report.status = StratumStatus::Connected;
  report.components = {ComponentLabel::Unique};
  report.source = g >= 5 ? "high-genus-connected" : "low-genus-connected";
  return report;
}

std::vector<Stratum> family_members(int genus) {
  if (genus < 3)
    fail(ErrorCode::GenusTooSmall,
         "family members are tabulated for genus >= 3, got " +
             std::to_string(genus));
  std::vector<Stratum> members;
  auto add = [&members](std::vector<int> orders) {
    Stratum stratum = Stratum::of(SingularityPattern(std::move(orders)));
    for (const Stratum& s : members)
      if (s.pattern == stratum.pattern) return;
    members.push_back(std::move(stratum));
  };
  int g = genus;
  for (int k = 0; k <= g - 2; ++k)  // F2
    add({4 * (g - k) - 6, 4 * k + 2});
  for (int k = 0; k <= g - 1; ++k)  // F3
    add({2 * (g - k) - 3, 2 * (g - k) - 3, 4 * k + 2});
  for (int k = -1; k <= g - 2; ++k)  // F4
    add({2 * (g - k) - 3, 2 * (g - k) - 3, 2 * k + 1, 2 * k + 1});
  return members;
}

}  // namespace qd
