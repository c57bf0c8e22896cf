#include <doctest.h>

#include "cayley/constructions.hpp"
#include "cayley/count.hpp"
#include "cayley/errors.hpp"
#include "helpers.hpp"

using namespace cayley;

TEST_CASE("build_gadget d=3") {
  Gadget h = build_gadget(3, 1);
  const Graph& g = h.graph;
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 12);
  for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
  for (int v = 4; v < 10; ++v) CHECK(g.degree(v) == 2);
  CHECK(connectivity(g, ConnectivityMode::Vertex) >= 2);
  CHECK_THROWS_AS(build_gadget(2, 1), Error);
}

TEST_CASE("gadget degree sums balance") {
  for (int d = 3; d <= 5; ++d) {
    Gadget h = build_gadget(d, 11);
    int left = 0, right = 0;
    for (int v = 0; v < 2 * d - 2; ++v) left += h.graph.degree(v);
    for (int v = 2 * d - 2; v < h.graph.vertex_count(); ++v) right += h.graph.degree(v);
    CHECK(left == d * (2 * d - 2));
    CHECK(right == (d - 1) * 2 * d);
  }
}

TEST_CASE("Appendix A d=3 t=2") {
  AppendixA a = build_appendix_a({3, 2, 7});
  const Graph& g = a.graph;
  CHECK(g.vertex_count() == 20);
  CHECK(g.regular_degree() == 3);
  CHECK(a.edge_connectivity >= 2);
  CHECK(a.vertex_connectivity >= 2);
  CHECK(count_independent_sets(g) >= pow2(11));

  // Each Z_i vertex has exactly one edge leaving its gadget, into Y_{i+1}.
  for (int i = 1; i <= 2; ++i) {
    const VertexSet next_y = a.y_block(i % 2 + 1);
    a.z_block(i).for_each([&](int z) { CHECK(g.adj(z).intersection_count(next_y) == 1); });
  }

  MaximalSetCheck empty = appendix_a_maximal_sets(a, {});
  CHECK(empty.ok());
  CHECK(empty.m.count() == 10);
}

TEST_CASE("Appendix A d=3 t=4 interval sets") {
  AppendixA a = build_appendix_a({3, 4, 1});
  MaximalSetCheck one = appendix_a_maximal_sets(a, {{1, 1}});
  CHECK(one.independent);
  CHECK(one.maximal);
  CHECK(one.m.count() >= a.cfg.n() - 2);
  for (const auto& s : appendix_a_interval_sets(a)) CHECK(appendix_a_maximal_sets(a, s).ok());
  CHECK_THROWS_AS(appendix_a_maximal_sets(a, {{2, 2}}), Error);
  CHECK_THROWS_AS(appendix_a_maximal_sets(a, {{1, 3}, {3, 3}}), Error);
}

TEST_CASE("Appendix A odd t is not bipartite") {
  AppendixA a = build_appendix_a({3, 3, 1});
  CHECK_FALSE(a.graph.is_bipartite());
  CHECK(a.graph.regular_degree() == 3);
}

TEST_CASE("Appendix B") {
  CayleyGraph b = build_appendix_b({8, 3});
  CHECK(b.group().order() == 16);
  CHECK(b.generators().elements() == vs(16, {1, 3, 13, 15}));
  CHECK(b.graph().parts()->x == vs(16, {0, 2, 4, 6, 8, 10, 12, 14}));
  CHECK(b.graph().is_connected());
  CHECK_THROWS_AS(build_appendix_b({8, 4}), Error);
  CHECK_THROWS_AS(build_appendix_b({3, 3}), Error);

  AppendixBReport r = appendix_b_structure_check({8, 3});
  CHECK(r.ok());
  for (const auto& [key, count] : r.table) CHECK(key.second - key.first == 3);
  AppendixBReport r12 = appendix_b_structure_check({12, 3});
  CHECK(r12.ok());
  for (const auto& [key, ratio] : r12.ratio) {
    CHECK(ratio > 0);
    CHECK(ratio <= 1);
  }
}

TEST_CASE("is_cyclic_progression") {
  int start = -1;
  CHECK(is_cyclic_progression(vs(16, {14, 0, 2}), 16, 2, &start));
  CHECK(start == 14);
  CHECK_FALSE(is_cyclic_progression(vs(16, {0, 2, 6}), 16, 2));
  CHECK(is_cyclic_progression(vs(16, {5}), 16, 2));
}
