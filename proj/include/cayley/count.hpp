#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cayley/bigcount.hpp"
#include "cayley/graph.hpp"

namespace cayley {

struct CountBudget {
  int branching_vertices = 64;
  int brute_force_vertices = 26;
  int subset_sum_side = 20;
  std::size_t max_records = 2'000'000;
  int max_closure_expansion = 24;  // |[A]| for subset weighting
};

/// i(G) by branching on a maximum-degree vertex, with component
/// factorization, path/cycle closed forms and memoization.
BigCount count_independent_sets(const Graph& g, const CountBudget& budget = {});
/// i(G) by testing every subset; independent oracle for the engine above.
BigCount count_independent_sets_bruteforce(const Graph& g,
                                           const CountBudget& budget = {});
/// Lucas number L_n = i(C_n) from the 2x2 transfer matrix [[1,1],[1,0]].
BigCount lucas(int n);

int independence_number(const Graph& g, const CountBudget& budget = {});

/// Every closed, 2-linked, small set on one side, sorted by (a, members).
std::vector<ClosedSetRecord> enumerate_small_2linked_closed(
    const Graph& g, Side side, const CountBudget& budget = {});

/// Number of 2-linked A with [A] = rec.closure.
BigCount preimage_count(const Graph& g, const ClosedSetRecord& rec,
                        const CountBudget& budget = {});

struct ContainerTable {
  int n = 0;
  bool closed_only = false;
  std::map<std::pair<int, int>, BigCount> entries;  // (a, g) -> count
};
/// G(a, g) over all small 2-linked A on side X (or closed ones only).
ContainerTable container_table(const Graph& g, bool closed_only = false,
                               const CountBudget& budget = {});

/// 2 * sum over A in X with small closure of 2^{n - |N(A)|}.
BigCount bipartite_bound_sum(const Graph& g, const CountBudget& budget = {});

struct ClusterBound {
  int n = 0;
  BigRational sum;          // over all small 2-linked A
  BigRational sum_closed;   // over closed ones only
  double bound = 0;         // 2^{n+1} exp(sum), rounded to nearest
  double bound_closed = 0;
  int records = 0;
};
ClusterBound cluster_bound(const Graph& g, const CountBudget& budget = {});

/// Decides i <= 2^{n+1} exp(s) with rational Taylor brackets around exp(s).
bool exp_bound_holds(const BigCount& i, int n, const BigRational& s);

}  // namespace cayley
