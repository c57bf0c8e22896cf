#include <doctest.h>

#include <map>
#include <set>

#include "cayley/constructions.hpp"
#include "cayley/corpus.hpp"
#include "cayley/count.hpp"
#include "cayley/errors.hpp"
#include "helpers.hpp"

using namespace cayley;

namespace {

std::vector<int> side_members(const Graph& g) { return g.parts()->x.members(); }

VertexSet subset_of(const Graph& g, const std::vector<int>& side, unsigned mask) {
  VertexSet a(g.vertex_count());
  for (std::size_t k = 0; k < side.size(); ++k)
    if (mask >> k & 1u) a.insert(side[k]);
  return a;
}

}  // namespace

TEST_CASE("count examples") {
  CHECK(count_independent_sets(cycle_graph(4).graph()) == 7);
  CHECK(count_independent_sets(edgeless_graph(5)) == 32);
  CHECK(count_independent_sets(complete_bipartite(2).graph()) == 7);
  CHECK(count_independent_sets(cycle_graph(6).graph()) == 18);
  CHECK(count_independent_sets_bruteforce(cycle_graph(8).graph()) == 47);
  CHECK(count_independent_sets_bruteforce(edgeless_graph(1)) == 2);
  CHECK(count_independent_sets_bruteforce(cycle_graph(5).graph()) == 11);
}

TEST_CASE("lucas against the additive recurrence") {
  BigCount a = 2, b = 1;  // L0, L1
  for (int n = 2; n <= 60; ++n) {
    BigCount c = a + b;
    a = b;
    b = c;
    if (n >= 3) CHECK(lucas(n) == b);
  }
}

TEST_CASE("engine agrees with brute force on Appendix A t=2") {
  AppendixA a = build_appendix_a({3, 2, 1});
  CHECK(count_independent_sets(a.graph) == count_independent_sets_bruteforce(a.graph));
}

TEST_CASE("budgets") {
  CountBudget tiny;
  tiny.brute_force_vertices = 4;
  CHECK_THROWS_AS(count_independent_sets_bruteforce(cycle_graph(8).graph(), tiny), Error);
  CountBudget few;
  few.max_records = 2;
  CHECK_THROWS_AS(enumerate_small_2linked_closed(cycle_graph(8).graph(), Side::X, few), Error);
}

TEST_CASE("independence_number") {
  CHECK(independence_number(cycle_graph(8).graph()) == 4);
  CHECK(independence_number(cycle_graph(5).graph()) == 2);
  CHECK(independence_number(complete_bipartite(4).graph()) == 4);
  CHECK(independence_number(edgeless_graph(3)) == 3);
}

TEST_CASE("small closed sets of C8") {
  const Graph c8 = cycle_graph(8).graph();
  auto recs = enumerate_small_2linked_closed(c8, Side::X);
  std::set<std::vector<int>> got;
  for (const auto& r : recs) got.insert(r.closure.members());
  CHECK(got == std::set<std::vector<int>>{{0}, {2}, {4}, {6}, {0, 2}, {2, 4}, {4, 6}, {0, 6}});
  ContainerTable t = container_table(c8);
  CHECK(t.entries.size() == 2);
  CHECK(t.entries.at({1, 2}) == 4);
  CHECK(t.entries.at({2, 3}) == 4);
}

// In C4 = K_{2,2} every nonempty A has N(A) = Y, so the closure is all of X
// and is not small.
TEST_CASE("complete bipartite graphs have no small closed sets") {
  CHECK(enumerate_small_2linked_closed(cycle_graph(4).graph(), Side::X).empty());
  for (int d = 2; d <= 5; ++d)
    CHECK(enumerate_small_2linked_closed(complete_bipartite(d).graph(), Side::X).empty());
  CHECK(container_table(cycle_graph(4).graph()).entries.empty());
}

// Subset-by-subset oracle for records, the table and the bound sum.
TEST_CASE("enumeration, table and bound sum match the subset oracle") {
  std::vector<Graph> graphs{cycle_graph(8).graph(), cycle_graph(12).graph(),
                            build_appendix_b({8, 3}).graph(), build_appendix_b({7, 5}).graph()};
  GroupSpec z2z8 = make_group({2, 8});
  graphs.push_back(build_cayley(z2z8, make_generators(z2z8, std::vector<int>{1, 7, 8})).graph());
  for (const Graph& g : graphs) {
    const auto side = side_members(g);
    const int n = static_cast<int>(side.size());
    std::set<std::vector<int>> closed;
    std::map<std::pair<int, int>, BigCount> table, closed_table;
    BigCount bsum = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      VertexSet a = subset_of(g, side, mask);
      ClosedSetRecord r = closure(g, a, Side::X);
      if (2 * r.a > n) continue;
      bsum += pow2(static_cast<unsigned>(n - r.g));
      if (a.empty() || !is_two_linked(g, a)) continue;
      table[{r.a, r.g}] += 1;
      if (r.closure == a) {
        closed.insert(a.members());
        closed_table[{r.a, r.g}] += 1;
      }
    }
    std::set<std::vector<int>> got;
    for (const auto& r : enumerate_small_2linked_closed(g, Side::X)) got.insert(r.closure.members());
    CHECK(got == closed);
    CHECK(container_table(g).entries == table);
    CHECK(container_table(g, true).entries == closed_table);
    CHECK(bipartite_bound_sum(g) == 2 * bsum);
  }
}

TEST_CASE("preimage_count") {
  const Graph c8 = cycle_graph(8).graph();
  for (const auto& r : enumerate_small_2linked_closed(c8, Side::X)) CHECK(preimage_count(c8, r) == 1);
  const Graph b = build_appendix_b({8, 3}).graph();
  for (const auto& r : enumerate_small_2linked_closed(b, Side::X)) CHECK(preimage_count(b, r) >= 1);
}

TEST_CASE("bipartite_bound_sum") {
  CHECK(bipartite_bound_sum(cycle_graph(8).graph()) == 80);
  CHECK(bipartite_bound_sum(cycle_graph(8).graph()) >= 47);
  // Only A = {} has a small closure in C4.
  CHECK(bipartite_bound_sum(cycle_graph(4).graph()) == 8);
  for (int d = 1; d <= 6; ++d) {
    const Graph k = complete_bipartite(d).graph();
    CHECK(bipartite_bound_sum(k) >= count_independent_sets(k));
  }
  CHECK_THROWS_AS(bipartite_bound_sum(cycle_graph(5).graph()), Error);
}

TEST_CASE("cluster_bound") {
  ClusterBound c8 = cluster_bound(cycle_graph(8).graph());
  CHECK(c8.sum == BigRational(3, 2));
  CHECK(c8.bound == doctest::Approx(143.41).epsilon(1e-3));
  CHECK(exp_bound_holds(47, 4, c8.sum));
  ClusterBound c4 = cluster_bound(cycle_graph(4).graph());
  CHECK(c4.sum == 0);
  CHECK(c4.bound == doctest::Approx(8));
  CHECK(exp_bound_holds(7, 2, c4.sum));
  for (int d = 1; d <= 6; ++d) {
    const Graph k = complete_bipartite(d).graph();
    CHECK(exp_bound_holds(count_independent_sets(k), d, cluster_bound(k).sum));
  }
}

TEST_CASE("exp_bound_holds is sharp in both directions") {
  // 32 e^{1.5} = 143.4126...
  CHECK(exp_bound_holds(143, 4, BigRational(3, 2)));
  CHECK_FALSE(exp_bound_holds(144, 4, BigRational(3, 2)));
  CHECK(exp_bound_holds(8, 2, 0));
  CHECK_FALSE(exp_bound_holds(9, 2, 0));
  // 2 e = 5.436...
  CHECK(exp_bound_holds(5, 0, 1));
  CHECK_FALSE(exp_bound_holds(6, 0, 1));
}
