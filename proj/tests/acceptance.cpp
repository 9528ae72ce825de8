// Acceptance suite: each criterion prints one PASS/FAIL line with its
// runtime; the process exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "qd/classify.hpp"
#include "qd/json_render.hpp"
#include "qd/stratum_map.hpp"
#include "qd/surface_cover.hpp"
#include "qd/table.hpp"
#include "support/generators.hpp"

using namespace qd;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<void(std::ostringstream&)>& body) {
  std::ostringstream detail;
  bool ok = true;
  auto start = std::chrono::steady_clock::now();
  try {
    body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail << "exception: " << e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (!detail.str().empty()) ok = false;
  if (elapsed > budget_seconds) {
    ok = false;
    detail << " [over time budget " << budget_seconds << "s]";
  }
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": "
            << name << "  (" << elapsed << "s)";
  if (!ok) std::cout << "  -- " << detail.str();
  std::cout << "\n";
  if (!ok) ++failures;
}

SingularityPattern pat(const char* text) {
  return SingularityPattern::parse(text);
}

std::set<SingularityPattern> two_component_strata(const StratumTable& table,
                                                  int genus) {
  std::set<SingularityPattern> out;
  for (const ComponentReport& report :
       table.by_genus[static_cast<std::size_t>(genus)])
    if (report.status == StratumStatus::TwoComponents)
      out.insert(report.stratum.pattern);
  return out;
}

}  // namespace

int main() {
  criterion(1, "classification tables reproduce the low-genus census", 10.0,
            [](std::ostringstream& err) {
    StratumTable table = build_table(4, 10);
    for (int g : {0, 1})
      for (const ComponentReport& report :
           table.by_genus[static_cast<std::size_t>(g)])
        if (report.status == StratumStatus::TwoComponents)
          err << "genus " << g << " stratum "
              << report.stratum.pattern.to_string() << " not connected; ";
    std::set<SingularityPattern> genus2 = two_component_strata(table, 2);
    std::set<SingularityPattern> genus2_expected{pat("6,-1,-1"),
                                                 pat("3,3,-1,-1")};
    if (genus2 != genus2_expected) err << "genus 2 list mismatch; ";
    for (int g : {3, 4}) {
      std::set<SingularityPattern> expected;
      for (const Stratum& s : family_members(g))
        if (s.pattern.size() <= 10) expected.insert(s.pattern);
      if (g == 3) {
        expected.insert(pat("-1,9"));
        expected.insert(pat("-1,3,6"));
        expected.insert(pat("-1,3,3,3"));
      } else {
        expected.insert(pat("12"));
      }
      std::set<SingularityPattern> got = two_component_strata(table, g);
      if (got != expected) {
        err << "genus " << g << " mismatch:";
        for (const auto& p : got)
          if (!expected.count(p)) err << " extra(" << p.to_string() << ")";
        for (const auto& p : expected)
          if (!got.count(p)) err << " missing(" << p.to_string() << ")";
        err << "; ";
      }
    }
  });

  criterion(2, "emptiness matches the four exceptional strata", 1.0,
            [](std::ostringstream& err) {
    std::set<SingularityPattern> expected_empty{pat("1,-1"), pat("4"),
                                                pat("1,3")};
    for (int genus : {0, 1, 2}) {
      for (const SingularityPattern& p : enumerate_strata(genus, 10)) {
        bool empty = is_empty(p);
        bool should = expected_empty.count(p) > 0;
        if (empty != should)
          err << "is_empty(" << p.to_string() << ") = " << empty << "; ";
      }
    }
    if (!is_empty(SingularityPattern()))
      err << "empty pattern must be an empty stratum; ";
  });

  criterion(3, "family base and target dimensions agree (g <= 10)", 1.0,
            [](std::ostringstream& err) {
    for (int g = 1; g <= 10; ++g) {
      for (int k = -1; k <= g - 2; ++k) {
        StratumMap m = hyperelliptic_map(FamilyId::F4, g, k);
        if (m.base_dim != m.target_dim || m.base_dim != 2 * g + 2)
          err << "F4 g=" << g << " k=" << k << "; ";
      }
      for (int k = 0; k <= g - 1; ++k) {
        StratumMap m = hyperelliptic_map(FamilyId::F3, g, k);
        if (m.base_dim != m.target_dim) err << "F3 g=" << g << " k=" << k << "; ";
      }
      if (g >= 2)
        for (int k = 0; k <= g - 2; ++k) {
          StratumMap m = hyperelliptic_map(FamilyId::F2, g, k);
          if (m.base_dim != m.target_dim)
            err << "F2 g=" << g << " k=" << k << "; ";
        }
    }
  });

  criterion(4, "exhaustive search re-derives the catalog", 60.0,
            [](std::ostringstream& err) {
    SearchBounds bounds{6, 2, 12, 12, 2};
    std::vector<StratumMap> searched = search_dimension_preserving(bounds);
    std::vector<StratumMap> listed = catalog(bounds);
    if (searched.size() != listed.size()) {
      err << "sizes " << searched.size() << " vs " << listed.size() << "; ";
      return;
    }
    for (std::size_t i = 0; i < searched.size(); ++i)
      if (!(searched[i].covering == listed[i].covering &&
            searched[i].target == listed[i].target &&
            searched[i].tag == listed[i].tag)) {
        err << "entry " << i << " differs; ";
        return;
      }
    SearchBounds high_only{6, 2, 12, 12, 3};
    for (const StratumMap& m : search_dimension_preserving(high_only))
      if (m.tag != MapTag::Exceptional1 && m.tag != MapTag::Exceptional2 &&
          m.tag != MapTag::Exceptional3)
        err << "non-exceptional survivor at degree >= 3: base "
            << m.base.pattern.to_string() << "; ";
  });

  criterion(5, "flat-surface golden cases", 5.0, [](std::ostringstream& err) {
    SurfaceAnalysis torus = analyze(example("torus"));
    if (!(torus.pattern == pat("0") && torus.genus == 1 && torus.square))
      err << "torus; ";
    SurfaceAnalysis pillow = analyze(example("pillowcase"));
    if (!(pillow.pattern == pat("-1,-1,-1,-1") && pillow.genus == 0 &&
          !pillow.square))
      err << "pillowcase; ";
    SurfaceAnalysis fig2 = analyze(example("figure2"));
    if (!(fig2.pattern == pat("2,2") && fig2.genus == 2 && !fig2.square))
      err << "figure2; ";
  });

  criterion(6, "property fuzz over surfaces and covering types", 120.0,
            [](std::ostringstream& err) {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> coin(0, 1);
    int surface_failures = 0;
    for (int i = 0; i < 1000; ++i) {
      FlatSurface s = qd::testing::random_surface(rng);
      if (!validate(s).empty()) {
        ++surface_failures;
        continue;
      }
      SurfaceAnalysis a = analyze(s);
      if (a.pattern.sum() != 4 * a.genus - 4) ++surface_failures;
      for (const VertexClass& v : a.classes) {
        auto loop = corner_loop_crossings(s, v);
        if (loop_holonomy(s, loop) != (v.order % 2 == 0 ? 1 : -1))
          ++surface_failures;
      }
      // double cover versus the covering-type prediction
      CoverSpec spec;
      for (std::size_t p = 0; p < s.pairings.size(); ++p)
        spec.swaps.push_back(coin(rng));
      std::vector<int> orders;
      std::vector<FiberProfile> fibers;
      for (const VertexClass& v : a.classes) {
        int swap_sum = 0;
        for (std::size_t p : corner_loop_crossings(s, v))
          swap_sum += spec.swaps[p];
        bool branch = swap_sum % 2 == 1;
        if (v.order == 0 && !branch) continue;
        orders.push_back(v.order);
        fibers.push_back({v.order, branch ? std::vector<int>{2}
                                          : std::vector<int>{1, 1}});
      }
      SingularityPattern derived_base{std::move(orders)};
      CoveringType derived(2, a.genus, std::move(fibers));
      DoubleCoverResult cover = double_cover(s, spec);
      if (cover.connected) {
        SurfaceAnalysis up = analyze(cover.surface);
        if (strip_marked(up.pattern) != pullback_pattern(derived, derived_base))
          ++surface_failures;
        if (up.genus != covered_genus(derived)) ++surface_failures;
      }
      // one random positive-determinant matrix per surface
      while (true) {
        std::uniform_int_distribution<int> entry(-3, 3);
        std::array<Rational, 4> m{Rational(entry(rng)), Rational(entry(rng)),
                                  Rational(entry(rng)), Rational(entry(rng))};
        if (!(Rational(0) < m[0] * m[3] - m[1] * m[2])) continue;
        SurfaceAnalysis after = analyze(gl2_act(s, m));
        if (!(after.pattern == a.pattern && after.genus == a.genus &&
              after.square == a.square))
          ++surface_failures;
        break;
      }
    }
    if (surface_failures > 0)
      err << surface_failures << " surface property failures; ";

    int covering_failures = 0;
    int checked = 0;
    for (int i = 0; i < 1400; ++i) {
      auto [base, covering] = qd::testing::random_covering(rng);
      ++checked;
      int rhs = covering.degree() * (2 * covering.base_genus() - 2) +
                covering.total_ramification();
      if (rhs % 2 != 0) {
        try {
          covered_genus(covering);
          ++covering_failures;  // must refuse to round
        } catch (const Error&) {
        }
        continue;
      }
      if (rhs < -2) continue;
      int genus_up = covered_genus(covering);
      if (2 * genus_up - 2 != rhs) ++covering_failures;
      SingularityPattern target = pullback_pattern(covering, base);
      if (target.sum() != 4 * genus_up - 4) ++covering_failures;
      try {
        dimension_gap(covering, base);  // dual computation agreement inside
      } catch (const Error&) {
        ++covering_failures;
      }
    }
    if (checked < 1000) err << "only " << checked << " covering types; ";
    if (covering_failures > 0)
      err << covering_failures << " covering property failures; ";
  });

  criterion(7, "canonical covers, geometric and arithmetic", 5.0,
            [](std::ostringstream& err) {
    for (const char* name : {"figure2", "pillowcase"}) {
      FlatSurface s = example(name);
      SurfaceAnalysis base = analyze(s);
      CoverSpec spec = canonical_cover_spec(s);
      DoubleCoverResult cover = double_cover(s, spec);
      if (!cover.connected) {
        err << name << " cover disconnected; ";
        continue;
      }
      SurfaceAnalysis up = analyze(cover.surface);
      if (!up.square) err << name << " cover not a square; ";
      int odd = 0;
      for (int k : base.pattern.orders())
        if (k % 2 != 0) ++odd;
      if (2 * up.genus - 2 != 2 * (2 * base.genus - 2) + odd)
        err << name << " genus off; ";
      // pattern-level double cover agrees with the geometric one:
      // quadratic orders upstairs are twice the Abelian zero orders, and
      // branch points over poles appear as marked points.
      AbelianPattern arithmetic = canonical_double_cover(base.pattern);
      std::vector<int> geometric_zero_orders;
      int geometric_marked = 0;
      for (int k : up.pattern.orders()) {
        if (k == 0) {
          ++geometric_marked;
        } else {
          if (k % 2 != 0) err << name << " odd order upstairs; ";
          geometric_zero_orders.push_back(k / 2);
        }
      }
      if (geometric_zero_orders != arithmetic.zero_orders)
        err << name << " zero orders disagree; ";
      if (geometric_marked != arithmetic.marked_count)
        err << name << " marked counts disagree; ";
      if (up.genus != arithmetic.genus) err << name << " genera disagree; ";
    }
  });

  if (failures == 0)
    std::cout << "all acceptance criteria passed\n";
  else
    std::cout << failures << " acceptance criteria FAILED\n";
  return failures == 0 ? 0 : 1;
}
