#include <doctest.h>

#include <random>

#include "cayley/corpus.hpp"
#include "cayley/errors.hpp"
#include "cayley/sumset.hpp"
#include "helpers.hpp"

using namespace cayley;

TEST_CASE("sumset") {
  GroupSpec z4 = make_group({4});
  CHECK(sumset(z4, vs(4, {0, 1}), vs(4, {0, 1})) == vs(4, {0, 1, 2}));
  GroupSpec z8 = make_group({8});
  CHECK(sumset(z8, vs(8, {1, 7}), vs(8, {1, 7})) == vs(8, {0, 2, 6}));
  CHECK(sumset(z8, vs(8, {1}), VertexSet(8)).empty());
  CHECK(iterated_sumset(z8, vs(8, {3}), vs(8, {1, 7}), 0) == vs(8, {3}));
}

// Direct definition: every pair, reduced coordinatewise.
TEST_CASE("sumset matches pairwise oracle on Z2xZ6") {
  GroupSpec g = make_group({2, 6});
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    VertexSet a(12), b(12);
    for (int v = 0; v < 12; ++v) {
      if (rng() % 3 == 0) a.insert(v);
      if (rng() % 3 == 0) b.insert(v);
    }
    VertexSet expect(12);
    a.for_each([&](int x) {
      b.for_each([&](int y) {
        Element ex = g.element(x), ey = g.element(y);
        Element s{{(ex.coords[0] + ey.coords[0]) % 2, (ex.coords[1] + ey.coords[1]) % 6}};
        expect.insert(g.id(s));
      });
    });
    CHECK(sumset(g, a, b) == expect);
  }
}

TEST_CASE("sumset_stats") {
  GroupSpec z16 = make_group({16});
  SumsetStats s = sumset_stats(z16, vs(16, {1, 3, 13, 15}));
  CHECK(s.doubling == 7);  // {0, +-2, +-4, +-6}
  int pairs = 0;
  for (auto [u, r] : s.reps) pairs += r;
  CHECK(pairs == 6);
  VertexSet two_d = sumset(z16, s.base, s.base);
  CHECK(s.heavy(1.0).is_subset_of(two_d));
}

TEST_CASE("fact41_check") {
  GroupSpec z16 = make_group({16});
  Fact41Report r = fact41_check(z16, vs(16, {0}), vs(16, {1, 15}), 2);
  CHECK(r.lhs == 3);
  CHECK(r.rhs == doctest::Approx(5));
  CHECK(r.holds);
  Fact41Report s = fact41_check(z16, vs(16, {0, 5}), vs(16, {3}), 3);
  CHECK(s.t == 0);
  CHECK(s.lhs == 2);
  CHECK(s.holds);

  GroupSpec z32 = make_group({32});
  std::mt19937_64 rng(41);
  for (int k = 0; k < 1000; ++k) {
    VertexSet m(32), d(32);
    for (int v = 0; v < 32; ++v) {
      if (rng() % 5 == 0) m.insert(v);
      if (rng() % 7 == 0) d.insert(v);
    }
    if (m.empty()) m.insert(0);
    if (d.empty()) d.insert(1);
    CHECK(fact41_check(z32, m, d, 2 + static_cast<int>(rng() % 2)).holds);
  }
}

TEST_CASE("prp_witness_search") {
  GroupSpec z64 = make_group({64});
  PrpWitness w = prp_witness_search(z64, vs(64, {0, 1, 2}), vs(64, {0, 1}), 2);
  CHECK(w.witness == vs(64, {0, 1, 2}));
  CHECK(w.lhs == 5);
  CHECK(w.m_plus_d == 4);
  PrpWitness id = prp_witness_search(z64, vs(64, {3, 9, 17}), vs(64, {0}), 2);
  CHECK(id.witness == vs(64, {3, 9, 17}));
  CHECK(prp_inequality(z64, vs(64, {0, 1, 2}), vs(64, {0, 1}), vs(64, {0, 1, 2}), 2));
  // |{0}+2D| = 3 > (4/3)^2 * 1 for D = {0,1}: a singleton would fail.
  CHECK_FALSE(prp_inequality(z64, vs(64, {0, 1, 2}), vs(64, {0, 1}), vs(64, {0}), 2));
}

TEST_CASE("olson_check") {
  GroupSpec z5 = make_group({5});
  OlsonReport r = olson_check(z5, vs(5, {0}), vs(5, {0, 1}));
  CHECK(r.branch == OlsonBranch::Expanded);
  CHECK(r.holds);
  GroupSpec z4 = make_group({4});
  OlsonReport s = olson_check(z4, vs(4, {0, 2}), vs(4, {0, 2}));
  CHECK(s.branch == OlsonBranch::Stabilized);
  CHECK(s.holds);
  CHECK_THROWS_AS(olson_check(z4, VertexSet(4), vs(4, {1})), Error);
}

TEST_CASE("pruse2_witness_search") {
  GroupSpec z64 = make_group({64});
  Pruse2Result single = pruse2_witness_search(z64, vs(64, {0, 3, 9}), vs(64, {5}), 2, 4);
  CHECK(single.t == 0);
  for (const auto& m : single.chain) CHECK(m == vs(64, {0, 3, 9}));

  const VertexSet m = vs(64, {0, 1, 2, 3, 4});
  const VertexSet d = vs(64, {0, 1, 63});
  Pruse2Result r = pruse2_witness_search(z64, m, d, 2, 4);
  CHECK(r.found);
  CHECK(r.chain.size() == 3);
  CHECK(pruse2_chain_valid(z64, m, d, r.chain, 4));
  Pruse2Result g = pruse2_witness_search(z64, m, d, 2, 4, SearchMode::Greedy);
  if (g.found) CHECK(pruse2_chain_valid(z64, m, d, g.chain, 4));
}

TEST_CASE("thin_generators") {
  GroupSpec z1024 = make_group({1024});
  std::vector<int> ids;
  for (int x = 1; x <= 64; ++x) {
    ids.push_back(x);
    ids.push_back(1024 - x);
  }
  GeneratorSet d = make_generators(z1024, ids);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    ThinningResult t = thin_generators(z1024, d, {1.0, seed});
    CHECK(t.symmetric);
    CHECK(t.generating);
    CHECK(t.spanning.is_subset_of(d.elements()));
  }
  ThinningResult a = thin_generators(z1024, d, {2.0, 5});
  ThinningResult b = thin_generators(z1024, d, {2.0, 5});
  CHECK(a.thinned.elements() == b.thinned.elements());
  CHECK_FALSE(a.precondition);  // |2D| = 257 > alpha |D| = 256

  GroupSpec z6 = make_group({6});
  CHECK_THROWS_AS(thin_generators(z6, make_generators(z6, std::vector<int>{2, 4}), {}), Error);
}

TEST_CASE("greedy_spanning_subset") {
  GroupSpec z12 = make_group({12});
  VertexSet s = greedy_spanning_subset(z12, vs(12, {2, 3, 4, 8, 9, 10}));
  CHECK(s == vs(12, {2, 3}));
  CHECK(is_generating(z12, s));
}

TEST_CASE("expansion checks") {
  CayleyGraph c8 = cycle_graph(8);
  ExpansionReport r = basic_expansion_check(c8, vs(8, {0, 2}));
  CHECK_FALSE(r.basic.applicable);
  CHECK(r.all_hold());

  GroupSpec z64 = make_group({64});
  VertexSet d(64);
  for (int x : {1, 3, 5, 7, 57, 59, 61, 63}) d.insert(x);
  InequalityCheck full = near_full_sumset_check(z64, d, d);
  CHECK(full.applicable);
  CHECK(full.holds);
}
