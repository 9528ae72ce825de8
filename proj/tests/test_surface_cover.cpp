#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qd/covering.hpp"
#include "qd/surface_cover.hpp"
#include "support/generators.hpp"

using namespace qd;

namespace {

// Branch data of a double cover read off the base surface: a vertex class is
// a branch point exactly when its corner loop swaps sheets. Unbranched marked
// points are invisible to the covering type and are dropped.
struct DerivedCovering {
  SingularityPattern base;
  CoveringType covering;
  std::vector<bool> branched;  // aligned with vertex_classes(surface)
};

DerivedCovering derive_covering(const FlatSurface& surface,
                                const CoverSpec& spec) {
  std::vector<VertexClass> classes = vertex_classes(surface);
  std::vector<bool> branched;
  std::vector<int> orders;
  std::vector<FiberProfile> fibers;
  for (const VertexClass& v : classes) {
    int swap_sum = 0;
    for (std::size_t p : corner_loop_crossings(surface, v))
      swap_sum += spec.swaps[p];
    bool branch = swap_sum % 2 == 1;
    branched.push_back(branch);
    if (v.order == 0 && !branch) continue;
    orders.push_back(v.order);
    fibers.push_back({v.order, branch ? std::vector<int>{2}
                                      : std::vector<int>{1, 1}});
  }
  int base_genus = genus(surface);
  return DerivedCovering{SingularityPattern(std::move(orders)),
                         CoveringType(2, base_genus, std::move(fibers)),
                         std::move(branched)};
}

}  // namespace

TEST_CASE("canonical cover specs of the reference surfaces") {
  SUBCASE("figure2 swaps exactly the half-turn pairings") {
    FlatSurface s = example("figure2");
    CoverSpec spec = canonical_cover_spec(s);
    REQUIRE(spec.swaps.size() == s.pairings.size());
    for (std::size_t i = 0; i < s.pairings.size(); ++i)
      CHECK(spec.swaps[i] ==
            (s.pairings[i].type == GluingType::HalfTurn ? 1 : 0));
  }
  SUBCASE("torus is already a square") {
    CHECK_THROWS_WITH_AS(canonical_cover_spec(example("torus")),
                         doctest::Contains("AlreadySquare"), Error);
  }
}

TEST_CASE("double covers of the reference surfaces") {
  SUBCASE("trivial monodromy gives two copies") {
    FlatSurface torus = example("torus");
    DoubleCoverResult cover = double_cover(torus, CoverSpec{{0, 0}});
    CHECK_FALSE(cover.connected);
    CHECK(cover.surface.faces.size() == 2);
  }
  SUBCASE("pillowcase canonical cover is the flat torus") {
    FlatSurface pillow = example("pillowcase");
    CoverSpec spec = canonical_cover_spec(pillow);
    DoubleCoverResult cover = double_cover(pillow, spec);
    REQUIRE(cover.connected);
    SurfaceAnalysis a = analyze(cover.surface);
    CHECK(a.genus == 1);
    CHECK(a.pattern == SingularityPattern::parse("0,0,0,0"));
    CHECK(a.square);
  }
  SUBCASE("figure2 canonical cover is a genus-3 translation surface") {
    FlatSurface fig2 = example("figure2");
    CoverSpec spec = canonical_cover_spec(fig2);
    DoubleCoverResult cover = double_cover(fig2, spec);
    REQUIRE(cover.connected);
    SurfaceAnalysis a = analyze(cover.surface);
    CHECK(a.genus == 3);
    CHECK(a.pattern == SingularityPattern::parse("2,2,2,2"));
    CHECK(a.square);
    // 2g~-2 = 2(2g-2) + #odd with no odd orders downstairs
    CHECK(2 * a.genus - 2 == 2 * (2 * genus(fig2) - 2));
  }
  SUBCASE("swap flags must cover every pairing") {
    CHECK_THROWS_AS(double_cover(example("torus"), CoverSpec{{0}}), Error);
    CHECK_THROWS_AS(double_cover(example("torus"), CoverSpec{{0, 2}}), Error);
  }
}

TEST_CASE("gl2 action preserves the flat invariants") {
  FlatSurface fig2 = example("figure2");
  SUBCASE("identity") {
    FlatSurface same = gl2_act(fig2, {Rational(1), Rational(0), Rational(0),
                                      Rational(1)});
    REQUIRE(same.faces.size() == fig2.faces.size());
    for (std::size_t i = 0; i < fig2.faces[0].edges.size(); ++i) {
      CHECK(same.faces[0].edges[i].id == fig2.faces[0].edges[i].id);
      CHECK(same.faces[0].edges[i].vec == fig2.faces[0].edges[i].vec);
    }
  }
  SUBCASE("diagonal stretch") {
    FlatSurface stretched =
        gl2_act(fig2, {Rational(2), Rational(0), Rational(0), Rational(1, 2)});
    SurfaceAnalysis a = analyze(stretched);
    CHECK(a.pattern == SingularityPattern::parse("2,2"));
    CHECK(a.genus == 2);
    CHECK_FALSE(a.square);
  }
  SUBCASE("shear on the torus") {
    FlatSurface sheared = gl2_act(
        example("torus"),
        {Rational(1), Rational(1), Rational(0), Rational(1)});
    CHECK(pattern_of(sheared) == SingularityPattern::parse("0"));
    CHECK(genus(sheared) == 1);
  }
  SUBCASE("singular and orientation-reversing matrices are rejected") {
    CHECK_THROWS_WITH_AS(
        gl2_act(fig2, {Rational(1), Rational(1), Rational(1), Rational(1)}),
        doctest::Contains("SingularMatrix"), Error);
    CHECK_THROWS_WITH_AS(
        gl2_act(fig2, {Rational(0), Rational(1), Rational(1), Rational(0)}),
        doctest::Contains("SingularMatrix"), Error);
  }
}

TEST_CASE("random double covers match the covering-type prediction") {
  std::mt19937 rng(7040);
  std::uniform_int_distribution<int> coin(0, 1);
  int connected_covers = 0;
  for (int i = 0; i < 300; ++i) {
    FlatSurface s = qd::testing::random_surface(rng);
    CoverSpec spec;
    for (std::size_t p = 0; p < s.pairings.size(); ++p)
      spec.swaps.push_back(coin(rng));

    DerivedCovering derived = derive_covering(s, spec);
    DoubleCoverResult cover = double_cover(s, spec);
    bool any_branch = false;
    for (bool b : derived.branched) any_branch = any_branch || b;
    if (!cover.connected) {
      CHECK_FALSE(any_branch);  // a branch point joins the sheets
      continue;
    }
    ++connected_covers;
    SurfaceAnalysis up = analyze(cover.surface);
    CHECK(strip_marked(up.pattern) ==
          pullback_pattern(derived.covering, derived.base));
    CHECK(up.genus == covered_genus(derived.covering));
  }
  CHECK(connected_covers > 100);
}

TEST_CASE("gl2 invariance over random matrices") {
  std::mt19937 rng(7041);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  int done = 0;
  FlatSurface surfaces[3] = {example("torus"), example("pillowcase"),
                             example("figure2")};
  while (done < 100) {
    std::array<Rational, 4> m{Rational(entry(rng), den(rng)),
                              Rational(entry(rng), den(rng)),
                              Rational(entry(rng), den(rng)),
                              Rational(entry(rng), den(rng))};
    if (!(Rational(0) < m[0] * m[3] - m[1] * m[2])) continue;
    const FlatSurface& s = surfaces[done % 3];
    SurfaceAnalysis before = analyze(s);
    SurfaceAnalysis after = analyze(gl2_act(s, m));
    CHECK(after.pattern == before.pattern);
    CHECK(after.genus == before.genus);
    CHECK(after.square == before.square);
    ++done;
  }
}

TEST_CASE("canonical covers of random non-square surfaces") {
  std::mt19937 rng(7042);
  int tried = 0;
  for (int i = 0; i < 200 && tried < 80; ++i) {
    FlatSurface s = qd::testing::random_surface(rng);
    if (is_square(s)) continue;
    ++tried;
    CoverSpec spec = canonical_cover_spec(s);
    DoubleCoverResult cover = double_cover(s, spec);
    REQUIRE(cover.connected);
    SurfaceAnalysis up = analyze(cover.surface);
    CHECK(up.square);
    SurfaceAnalysis base = analyze(s);
    int odd = 0;
    for (int k : base.pattern.orders())
      if (k % 2 != 0) ++odd;
    CHECK(2 * up.genus - 2 == 2 * (2 * base.genus - 2) + odd);
  }
  CHECK(tried > 20);
}
