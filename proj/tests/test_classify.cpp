#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qd/classify.hpp"
#include "support/generators.hpp"

using namespace qd;

namespace {

SingularityPattern pat(const char* text) {
  return SingularityPattern::parse(text);
}

}  // namespace

TEST_CASE("hyperelliptic family shape matching") {
  auto f2 = hyperelliptic_family(pat("6,6"));
  REQUIRE(f2.has_value());
  CHECK(f2->family == FamilyId::F2);
  CHECK(f2->g == 4);
  CHECK(f2->k == 1);

  auto f3 = hyperelliptic_family(pat("-1,-1,2"));
  REQUIRE(f3.has_value());
  CHECK(f3->family == FamilyId::F3);
  CHECK(f3->g == 1);
  CHECK(f3->k == 0);

  auto f4 = hyperelliptic_family(pat("3,3,1,1"));
  REQUIRE(f4.has_value());
  CHECK(*f4 == FamilyMatch{FamilyId::F4, 3, 0});

  CHECK_FALSE(hyperelliptic_family(pat("12")).has_value());
  CHECK_FALSE(hyperelliptic_family(pat("-1,9")).has_value());
  CHECK_FALSE(hyperelliptic_family(pat("4,4")).has_value());  // 4 mod 4 = 0
  CHECK_FALSE(hyperelliptic_family(pat("2,2,2,2")).has_value());

  // family genus always equals the pattern genus
  for (int g = 1; g <= 8; ++g) {
    for (int k = -1; k <= g - 2; ++k) {
      auto m = hyperelliptic_family(SingularityPattern(
          {2 * (g - k) - 3, 2 * (g - k) - 3, 2 * k + 1, 2 * k + 1}));
      REQUIRE(m.has_value());
      CHECK(m->g == g);
    }
  }
}

TEST_CASE("classification ladder") {
  SUBCASE("empty strata") {
    for (const char* text : {"", "1,-1", "4", "1,3", "4,0", "1,3,0,0"}) {
      ComponentReport r = classify(SingularityPattern::parse(text));
      CHECK(r.status == StratumStatus::Empty);
      CHECK(r.components.empty());
    }
  }
  SUBCASE("genus zero is connected") {
    ComponentReport r = classify(pat("-1,-1,-1,-1"));
    CHECK(r.status == StratumStatus::Connected);
    CHECK(r.components == std::vector<ComponentLabel>{ComponentLabel::Unique});
    ComponentReport r2 = classify(pat("2,1,-1^7"));
    CHECK(r2.status == StratumStatus::Connected);
  }
  SUBCASE("genus one coinciding strata carry the family record") {
    for (const char* text : {"-1,-1,2", "-1,-1,1,1"}) {
      ComponentReport r = classify(SingularityPattern::parse(text));
      CHECK(r.status == StratumStatus::Connected);
      CHECK(r.components ==
            std::vector<ComponentLabel>{ComponentLabel::Hyperelliptic});
      CHECK(r.family.has_value());
    }
    ComponentReport plain = classify(pat("4,-1,-1,-1,-1"));
    CHECK(plain.status == StratumStatus::Connected);
    CHECK_FALSE(plain.family.has_value());
  }
  SUBCASE("genus two: coinciding versus split") {
    for (const char* text : {"2,2", "1,1,2", "1,1,1,1"}) {
      ComponentReport r = classify(SingularityPattern::parse(text));
      CHECK(r.status == StratumStatus::Connected);
      CHECK(r.family.has_value());
    }
    for (const char* text : {"6,-1,-1", "3,3,-1,-1"}) {
      ComponentReport r = classify(SingularityPattern::parse(text));
      CHECK(r.status == StratumStatus::TwoComponents);
      CHECK(r.components ==
            std::vector<ComponentLabel>{ComponentLabel::Hyperelliptic,
                                        ComponentLabel::Nonhyperelliptic});
      CHECK(r.family.has_value());
    }
  }
  SUBCASE("exceptional strata have two opaque components") {
    for (const char* text : {"-1,9", "-1,3,6", "-1,3,3,3", "12"}) {
      ComponentReport r = classify(SingularityPattern::parse(text));
      CHECK(r.status == StratumStatus::TwoComponents);
      CHECK(r.components ==
            std::vector<ComponentLabel>{ComponentLabel::ExceptionalComponent1,
                                        ComponentLabel::ExceptionalComponent2});
      CHECK_FALSE(r.family.has_value());
    }
  }
  SUBCASE("high genus generic strata are connected") {
    CHECK(classify(pat("16")).status == StratumStatus::Connected);
    CHECK(classify(pat("8,4,4")).status == StratumStatus::Connected);
  }
}

TEST_CASE("classify is stable under marked points") {
  std::mt19937 rng(7010);
  for (int i = 0; i < 200; ++i) {
    SingularityPattern p = qd::testing::random_pattern(rng);
    std::vector<int> with_marked = p.orders();
    with_marked.insert(with_marked.end(), 1 + (i % 3), 0);
    ComponentReport a = classify(p);
    ComponentReport b = classify(SingularityPattern(std::move(with_marked)));
    CHECK(a == b);
  }
}

TEST_CASE("hyperelliptic label appears exactly with a family record") {
  std::mt19937 rng(7011);
  for (int i = 0; i < 400; ++i) {
    SingularityPattern p = qd::testing::random_pattern(rng);
    ComponentReport r = classify(p);
    bool has_hyp = false;
    for (ComponentLabel label : r.components)
      if (label == ComponentLabel::Hyperelliptic) has_hyp = true;
    if (has_hyp) CHECK(r.family.has_value());
    if (r.family.has_value())
      CHECK(hyperelliptic_family(strip_marked(p)) == r.family);
    CHECK((r.status == StratumStatus::Empty) == r.components.empty());
    CHECK((r.status == StratumStatus::TwoComponents) ==
          (r.components.size() == 2));
  }
}

TEST_CASE("family members at genus 3") {
  std::vector<Stratum> members = family_members(3);
  std::set<SingularityPattern> got;
  for (const Stratum& s : members) got.insert(s.pattern);
  std::set<SingularityPattern> expect{pat("6,2"),        pat("3,3,2"),
                                      pat("1,1,6"),      pat("-1,-1,10"),
                                      pat("5,5,-1,-1"),  pat("3,3,1,1")};
  CHECK(got == expect);
  CHECK(got.size() == members.size());  // no duplicates
  for (const Stratum& s : members) {
    ComponentReport r = classify(s.pattern);
    CHECK(r.status == StratumStatus::TwoComponents);
    int hyp = 0;
    for (ComponentLabel label : r.components)
      if (label == ComponentLabel::Hyperelliptic) ++hyp;
    CHECK(hyp == 1);
  }
  CHECK_THROWS_WITH_AS(family_members(2), doctest::Contains("GenusTooSmall"),
                       Error);
}

TEST_CASE("family members classify as two components up to genus 10") {
  for (int g = 3; g <= 10; ++g)
    for (const Stratum& s : family_members(g)) {
      ComponentReport r = classify(s.pattern);
      CHECK(r.status == StratumStatus::TwoComponents);
      CHECK(r.family.has_value());
      CHECK(r.family->g == g);
    }
}
