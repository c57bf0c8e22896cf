#include <doctest.h>

#include "cayley/constructions.hpp"
#include "cayley/corpus.hpp"
#include "cayley/graph.hpp"
#include "helpers.hpp"

using namespace cayley;

TEST_CASE("build_cayley basics") {
  CayleyGraph c4 = cycle_graph(4);
  CHECK(c4.graph().regular_degree() == 2);
  REQUIRE(c4.graph().is_bipartite());
  CHECK(c4.graph().parts()->x == vs(4, {0, 2}));

  CayleyGraph b = build_appendix_b({8, 3});
  CHECK(b.generators().ids() == std::vector<int>{1, 3, 13, 15});
  CHECK(b.graph().regular_degree() == 4);
  CHECK(b.graph().is_bipartite());
  CHECK(b.graph().is_connected());
  for (const auto& [u, v] : b.graph().edges()) CHECK(b.graph().adjacent(v, u));
}

TEST_CASE("neighborhood") {
  const Graph c8 = cycle_graph(8).graph();
  CHECK(c8.neighborhood(vs(8, {0}), 1) == vs(8, {1, 7}));
  CHECK(c8.neighborhood(vs(8, {0}), 2) == vs(8, {0, 2, 6}));
  CHECK(c8.neighborhood(c8.empty_set()).empty());
}

TEST_CASE("closure") {
  const Graph c8 = cycle_graph(8).graph();
  ClosedSetRecord r = closure(c8, vs(8, {0}));
  CHECK(r.closure == vs(8, {0}));
  CHECK(r.nbhd == vs(8, {1, 7}));
  CHECK((r.a == 1 && r.g == 2 && r.t == 1));

  ClosedSetRecord s = closure(c8, vs(8, {0, 2}));
  CHECK(s.closure == vs(8, {0, 2}));
  CHECK(s.nbhd == vs(8, {1, 3, 7}));
  CHECK(s.boundary == vs(8, {3, 7}));
  CHECK((s.a == 2 && s.g == 3 && s.t == 1));
  CHECK(s.small());

  const auto& parts = *c8.parts();
  ClosedSetRecord x = closure(c8, parts.x);
  CHECK(x.closure == parts.x);
  CHECK(x.nbhd == parts.y);
  CHECK(x.boundary.empty());

  // Complete bipartite: any nonempty A closes to the whole side.
  const Graph k33 = complete_bipartite(3).graph();
  ClosedSetRecord k = closure(k33, vs(6, {0}));
  CHECK(k.closure == k33.parts()->x);
  CHECK_FALSE(k.small());
}

TEST_CASE("closure is closed and idempotent") {
  const Graph g = build_appendix_b({8, 3}).graph();
  const VertexSet x = g.parts()->x;
  for (int mask = 1; mask < 256; mask += 7) {
    VertexSet a(g.vertex_count());
    int bit = 0;
    x.for_each([&](int v) {
      if (mask >> bit++ & 1) a.insert(v);
    });
    ClosedSetRecord r = closure(g, a);
    CHECK(a.is_subset_of(r.closure));
    CHECK(g.neighborhood(r.closure) == g.neighborhood(a));
    x.for_each([&](int u) {
      if (g.adj(u).is_subset_of(r.nbhd)) CHECK(r.closure.contains(u));
    });
    CHECK(closure(g, r.closure).closure == r.closure);
  }
}

TEST_CASE("two_linked_components") {
  const Graph c8 = cycle_graph(8).graph();
  CHECK(two_linked_components(c8, vs(8, {0, 2})).size() == 1);
  CHECK(two_linked_components(c8, vs(8, {0, 4})).size() == 2);
  CHECK(two_linked_components(c8, vs(8, {0, 2, 4})).size() == 1);
}

TEST_CASE("g_alpha") {
  const Graph c8 = cycle_graph(8).graph();
  ClosedSetRecord r = closure(c8, vs(8, {0, 2}));
  CHECK(g_alpha(c8, r, 2) == vs(8, {1}));
  CHECK(g_alpha(c8, r, 0) == r.nbhd);
  CHECK(g_alpha(c8, r, 3).empty());
}

TEST_CASE("times_k2") {
  CayleyGraph c10 = times_k2(cycle_graph(5));
  CHECK(c10.vertex_count() == 10);
  CHECK(c10.graph().regular_degree() == 2);
  CHECK(c10.graph().is_connected());

  CayleyGraph two_c4 = times_k2(cycle_graph(4));
  CHECK(two_c4.vertex_count() == 8);
  CHECK_FALSE(two_c4.graph().is_connected());
  CHECK(two_c4.graph().regular_degree() == 2);

  GroupSpec z2 = make_group({2});
  CayleyGraph k2 = build_cayley(z2, make_generators(z2, std::vector<int>{1}));
  CayleyGraph m = times_k2(k2);
  CHECK(m.graph().edge_count() == 2);
  CHECK(m.graph().regular_degree() == 1);

  // The generic tensor product agrees edge for edge up to relabelling.
  CHECK(times_k2(cycle_graph(5).graph()).edge_count() == 10);
}

TEST_CASE("connectivity") {
  const Graph c8 = cycle_graph(8).graph();
  CHECK(connectivity(c8, ConnectivityMode::Edge) == 2);
  CHECK(connectivity(c8, ConnectivityMode::Vertex) == 2);
  GroupSpec z4 = make_group({4});
  const Graph k4 = build_cayley(z4, make_generators(z4, std::vector<int>{1, 2, 3})).graph();
  CHECK(connectivity(k4, ConnectivityMode::Edge) == 3);
  CHECK(connectivity(k4, ConnectivityMode::Vertex) == 3);
  GroupSpec z6 = make_group({6});
  const Graph split = build_cayley(z6, make_generators(z6, std::vector<int>{2, 4})).graph();
  CHECK(connectivity(split, ConnectivityMode::Edge) == 0);
}
