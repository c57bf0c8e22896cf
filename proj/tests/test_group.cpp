#include <doctest.h>

#include <set>

#include "cayley/errors.hpp"
#include "cayley/group.hpp"
#include "helpers.hpp"

using namespace cayley;

TEST_CASE("make_group") {
  CHECK(make_group({4}).order() == 4);
  GroupSpec g = make_group({2, 4});
  CHECK(g.order() == 8);
  CHECK(g.to_string() == "Z2xZ4");
  CHECK_THROWS_AS(make_group({1, 3}), Error);
  CHECK_THROWS_AS(make_group({}), Error);
}

TEST_CASE("isomorphic presentations compare equal") {
  CHECK(make_group({6}) == make_group({2, 3}));
  CHECK_FALSE(make_group({2, 2}) == make_group({4}));
}

TEST_CASE("parse_group reports position") {
  CHECK(parse_group("Z2xZ8").order() == 16);
  try {
    parse_group("Z2xQ8");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidSpec);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("element ids round trip and arithmetic") {
  GroupSpec g = make_group({2, 4});
  for (int x = 0; x < g.order(); ++x) {
    CHECK(g.id(g.element(x)) == x);
    CHECK(g.add(x, g.neg(x)) == 0);
    for (int y = 0; y < g.order(); ++y) CHECK(g.add(x, y) == g.add(y, x));
  }
  CHECK(g.id(Element{{1, 3}}) == 7);
}

// Number of Abelian groups of order n is the product over p^e || n of the
// partition number p(e).
TEST_CASE("enumerate_abelian_groups") {
  CHECK(enumerate_abelian_groups(8).size() == 3);
  CHECK(enumerate_abelian_groups(6).size() == 1);
  CHECK(enumerate_abelian_groups(2).size() == 1);
  CHECK(enumerate_abelian_groups(16).size() == 5);
  CHECK(enumerate_abelian_groups(36).size() == 4);
  CHECK(enumerate_abelian_groups(64).size() == 11);
  for (const auto& g : enumerate_abelian_groups(24)) CHECK(g.order() == 24);
}

TEST_CASE("subgroup_generated") {
  GroupSpec z8 = make_group({8});
  CHECK(subgroup_generated(z8, vs(8, {2, 6})) == vs(8, {0, 2, 4, 6}));
  CHECK(subgroup_generated(z8, vs(8, {1, 7})).count() == 8);
  GroupSpec g = make_group({2, 4});
  VertexSet s(8);
  s.insert(g.id(Element{{1, 1}}));
  s.insert(g.id(Element{{1, 3}}));
  VertexSet h = subgroup_generated(g, s);
  std::set<std::vector<int>> got;
  h.for_each([&](int x) { got.insert(g.element(x).coords); });
  CHECK(got == std::set<std::vector<int>>{{0, 0}, {1, 1}, {0, 2}, {1, 3}});
  CHECK_FALSE(is_generating(g, s));
}

TEST_CASE("make_generators validation") {
  GroupSpec z8 = make_group({8});
  CHECK_THROWS_AS(make_generators(z8, std::vector<int>{1}), Error);
  CHECK_THROWS_AS(make_generators(z8, std::vector<int>{0, 1, 7}), Error);
  CHECK_THROWS_AS(make_generators(z8, std::vector<int>{}), Error);
  CHECK(make_generators(z8, std::vector<int>{1}, true).size() == 2);
  CHECK(make_generators(z8, std::vector<int>{4}).size() == 1);
}

TEST_CASE("bipartition") {
  GroupSpec z6 = make_group({6});
  auto p = bipartition(z6, make_generators(z6, std::vector<int>{1, 5}));
  REQUIRE(p);
  CHECK(p->first == vs(6, {0, 2, 4}));
  CHECK(p->second == vs(6, {1, 3, 5}));
  CHECK_FALSE(bipartition(z6, make_generators(z6, std::vector<int>{1, 2, 4, 5})));

  GroupSpec v4 = make_group({2, 2});
  auto q = bipartition(v4, make_generators(v4, std::vector<Element>{{{0, 1}}, {{1, 0}}}));
  REQUIRE(q);
  CHECK(q->first == vs(4, {v4.id(Element{{0, 0}}), v4.id(Element{{1, 1}})}));
}

TEST_CASE("symmetric generator sets count 2^orbits - 1") {
  // Z8: orbits {1,7},{2,6},{3,5},{4}.
  CHECK(all_symmetric_generator_sets(make_group({8})).size() == 15);
  // Z2^3: seven involutions.
  CHECK(all_symmetric_generator_sets(make_group({2, 2, 2})).size() == 127);
}
