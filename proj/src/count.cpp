#include "cayley/count.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

BigCount fibonacci(int k) {  // F_1 = F_2 = 1
  BigCount a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    BigCount c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

void check_budget(int vertices, int cap, const char* what) {
  if (vertices > cap)
    throw Error(ErrorKind::InstanceTooLarge,
                std::string(what) + ": " + std::to_string(vertices) +
                    " vertices exceeds budget " + std::to_string(cap));
}

class BranchingCounter {
 public:
  explicit BranchingCounter(const Graph& g) : g_(g) {}

  BigCount count(const VertexSet& alive) {
    if (alive.empty()) return 1;
    BigCount total = 1;
    VertexSet left = alive;
    while (!left.empty()) {
      VertexSet comp = component(left.first(), left);
      left -= comp;
      total *= count_connected(comp);
    }
    return total;
  }

 private:
  VertexSet component(int s, const VertexSet& alive) const {
    VertexSet comp(g_.vertex_count());
    comp.insert(s);
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      VertexSet next = (g_.adj(u) & alive) - comp;
      next.for_each([&](int w) {
        comp.insert(w);
        stack.push_back(w);
      });
    }
    return comp;
  }

  BigCount count_connected(const VertexSet& comp) {
    const int k = comp.count();
    if (k == 1) return 2;
    int best = -1, best_deg = -1, degree_sum = 0;
    comp.for_each([&](int v) {
      int dv = g_.degree_into(v, comp);
      degree_sum += dv;
      if (dv > best_deg) {
        best_deg = dv;
        best = v;
      }
    });
    if (best_deg <= 2) {
      // Paths and cycles.
      if (degree_sum / 2 == k - 1) return fibonacci(k + 2);
      return lucas(k);
    }
    if (auto it = memo_.find(comp); it != memo_.end()) return it->second;
    VertexSet without = comp;
    without.erase(best);
    VertexSet with = without - g_.adj(best);
    BigCount r = count(without) + count(with);
    memo_.emplace(comp, r);
    return r;
  }

  const Graph& g_;
  std::unordered_map<VertexSet, BigCount, VertexSetHash> memo_;
};

class IndependenceSolver {
 public:
  explicit IndependenceSolver(const Graph& g) : g_(g) {}

  int solve(const VertexSet& alive) {
    if (alive.empty()) return 0;
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
    int min_v = -1, min_deg = 0, max_v = -1, max_deg = -1;
    alive.for_each([&](int v) {
      int dv = g_.degree_into(v, alive);
      if (min_v < 0 || dv < min_deg) {
        min_v = v;
        min_deg = dv;
      }
      if (dv > max_deg) {
        max_v = v;
        max_deg = dv;
      }
    });
    int r;
    if (min_deg <= 1) {
      VertexSet rest = alive - g_.adj(min_v);
      rest.erase(min_v);
      r = 1 + solve(rest);
    } else {
      VertexSet without = alive;
      without.erase(max_v);
      VertexSet with = without - g_.adj(max_v);
      r = std::max(solve(without), 1 + solve(with));
    }
    memo_.emplace(alive, r);
    return r;
  }

 private:
  const Graph& g_;
  std::unordered_map<VertexSet, int, VertexSetHash> memo_;
};

const VertexSet& side_set(const Graph& g, Side side) {
  if (!g.is_bipartite())
    throw Error(ErrorKind::InvalidInput, "operation requires a bipartite graph");
  return side == Side::X ? g.parts()->x : g.parts()->y;
}

}  // namespace

BigCount lucas(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "Lucas index must be >= 0");
  // L_n = trace of [[1,1],[1,0]]^n.
  BigCount r00 = 1, r01 = 0, r10 = 0, r11 = 1;
  BigCount m00 = 1, m01 = 1, m10 = 1, m11 = 0;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) {
      BigCount a = r00 * m00 + r01 * m10, b = r00 * m01 + r01 * m11;
      BigCount c = r10 * m00 + r11 * m10, d = r10 * m01 + r11 * m11;
      r00 = a, r01 = b, r10 = c, r11 = d;
    }
    BigCount a = m00 * m00 + m01 * m10, b = m00 * m01 + m01 * m11;
    BigCount c = m10 * m00 + m11 * m10, d = m10 * m01 + m11 * m11;
    m00 = a, m01 = b, m10 = c, m11 = d;
  }
  return r00 + r11;
}

BigCount count_independent_sets(const Graph& g, const CountBudget& budget) {
  check_budget(g.vertex_count(), budget.branching_vertices, "branching engine");
  BranchingCounter engine(g);
  return engine.count(g.all());
}

BigCount count_independent_sets_bruteforce(const Graph& g,
                                           const CountBudget& budget) {
  const int n = g.vertex_count();
  check_budget(n, std::min(budget.brute_force_vertices, 30), "brute force");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    g.adj(v).for_each([&](int w) { adj[v] |= std::uint32_t{1} << w; });
  const std::uint32_t total = std::uint32_t{1} << n;
  std::vector<std::uint8_t> ind(total);
  ind[0] = 1;
  std::uint64_t count = 1;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    std::uint32_t rest = mask & (mask - 1);
    int low = std::countr_zero(mask);
    ind[mask] = ind[rest] && !(adj[low] & rest);
    count += ind[mask];
  }
  return BigCount(count);
}

int independence_number(const Graph& g, const CountBudget& budget) {
  check_budget(g.vertex_count(), budget.branching_vertices, "independence number");
  IndependenceSolver solver(g);
  return solver.solve(g.all());
}

std::vector<ClosedSetRecord> enumerate_small_2linked_closed(
    const Graph& g, Side side, const CountBudget& budget) {
  const VertexSet& own = side_set(g, side);
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<ClosedSetRecord> out;
  std::vector<std::size_t> pending;

  auto visit = [&](const VertexSet& a) {
    ClosedSetRecord rec = closure(g, a, side);
    if (!rec.small() || !seen.insert(rec.closure).second) return;
    if (out.size() >= budget.max_records)
      throw Error(ErrorKind::InstanceTooLarge,
                  "closed-set enumeration exceeded " +
                      std::to_string(budget.max_records) + " records");
    rec.set = rec.closure;
    out.push_back(std::move(rec));
    pending.push_back(out.size() - 1);
  };

  // Every closed 2-linked set is reached from the closure of a singleton by
  // repeatedly adding a square-neighbour and closing; closures only grow
  // along the way, so pruning non-small sets loses nothing.
  own.for_each([&](int v) { visit(VertexSet(g.vertex_count(), {v})); });
  while (!pending.empty()) {
    std::size_t idx = pending.back();
    pending.pop_back();
    const VertexSet c = out[idx].closure;
    VertexSet frontier = (g.neighborhood(out[idx].nbhd) & own) - c;
    frontier.for_each([&](int v) {
      VertexSet next = c;
      next.insert(v);
      visit(next);
    });
  }
  std::sort(out.begin(), out.end(), [](const ClosedSetRecord& x, const ClosedSetRecord& y) {
    if (x.a != y.a) return x.a < y.a;
    return lex_less(x.closure, y.closure);
  });
  return out;
}

BigCount preimage_count(const Graph& g, const ClosedSetRecord& rec,
                        const CountBudget& budget) {
  const std::vector<int> c = rec.closure.members();
  const int k = static_cast<int>(c.size());
  if (k > std::min(budget.max_closure_expansion, 30))
    throw Error(ErrorKind::InstanceTooLarge,
                "closure of size " + std::to_string(k) +
                    " too large for subset weighting");
  if (k == 0) return 0;
  std::vector<std::uint32_t> cover;  // per y in N(C): adjacent members of C
  rec.nbhd.for_each([&](int y) {
    std::uint32_t m = 0;
    for (int i = 0; i < k; ++i)
      if (g.adjacent(c[i], y)) m |= std::uint32_t{1} << i;
    cover.push_back(m);
  });
  std::vector<std::uint32_t> sq(static_cast<std::size_t>(k));
  for (std::uint32_t m : cover)
    for (int i = 0; i < k; ++i)
      if (m >> i & 1U) sq[i] |= m & ~(std::uint32_t{1} << i);

  std::uint64_t count = 0;
  const std::uint32_t total = (k == 32) ? 0 : (std::uint32_t{1} << k);
  for (std::uint32_t a = 1; a < total; ++a) {
    bool covers = true;
    for (std::uint32_t m : cover)
      if (!(m & a)) {
        covers = false;
        break;
      }
    if (!covers) continue;
    std::uint32_t reach = a & (~a + 1);
    std::uint32_t frontier = reach;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= sq[std::countr_zero(f)];
      next &= a & ~reach;
      reach |= next;
      frontier = next;
    }
    if (reach == a) ++count;
  }
  return BigCount(count);
}

ContainerTable container_table(const Graph& g, bool closed_only,
                               const CountBudget& budget) {
  ContainerTable t;
  t.closed_only = closed_only;
  t.n = side_set(g, Side::X).count();
  for (const auto& rec : enumerate_small_2linked_closed(g, Side::X, budget)) {
    BigCount w = closed_only ? BigCount(1) : preimage_count(g, rec, budget);
    t.entries[{rec.a, rec.g}] += w;
  }
  return t;
}

BigCount bipartite_bound_sum(const Graph& g, const CountBudget& budget) {
  const VertexSet& x = side_set(g, Side::X);
  const VertexSet& y = g.parts()->y;
  const int n = x.count();
  if (y.count() != n)
    throw Error(ErrorKind::InvalidInput, "bipartition sides differ in size");
  check_budget(n, std::min(budget.subset_sum_side, 26), "subset sum side");
  std::vector<int> yloc(static_cast<std::size_t>(g.vertex_count()), -1);
  int idx = 0;
  y.for_each([&](int v) { yloc[v] = idx++; });
  std::vector<std::uint32_t> nx;
  x.for_each([&](int u) {
    std::uint32_t m = 0;
    g.adj(u).for_each([&](int w) { m |= std::uint32_t{1} << yloc[w]; });
    nx.push_back(m);
  });
  const std::uint32_t total = std::uint32_t{1} << n;
  std::vector<std::uint32_t> nbhd(total);
  std::vector<std::uint64_t> by_size(static_cast<std::size_t>(n) + 1);
  for (std::uint32_t a = 0; a < total; ++a) {
    if (a) nbhd[a] = nbhd[a & (a - 1)] | nx[std::countr_zero(a)];
    const std::uint32_t na = nbhd[a];
    int cl = 0;
    for (std::uint32_t m : nx) cl += (m & ~na) == 0;
    if (2 * cl <= n) ++by_size[std::popcount(na)];
  }
  BigCount sum = 0;
  for (int s = 0; s <= n; ++s) sum += BigCount(by_size[s]) << (n - s);
  return 2 * sum;
}

ClusterBound cluster_bound(const Graph& g, const CountBudget& budget) {
  ClusterBound r;
  r.n = side_set(g, Side::X).count();
  for (const auto& rec : enumerate_small_2linked_closed(g, Side::X, budget)) {
    BigRational w(BigCount(1), pow2(static_cast<unsigned>(rec.g)));
    r.sum_closed += w;
    r.sum += w * BigRational(preimage_count(g, rec, budget));
    ++r.records;
  }
  r.bound = std::ldexp(std::exp(r.sum.convert_to<double>()), r.n + 1);
  r.bound_closed = std::ldexp(std::exp(r.sum_closed.convert_to<double>()), r.n + 1);
  return r;
}

bool exp_bound_holds(const BigCount& i, int n, const BigRational& s) {
  if (s < 0) throw Error(ErrorKind::InvalidInput, "exponent must be >= 0");
  const BigRational target(i, pow2(static_cast<unsigned>(n + 1)));
  BigRational term = 1;
  BigRational partial = 1;
  for (int k = 1; k <= 4096; ++k) {
    if (target <= partial) return true;
    // Tail after the term of index k-1 is at most term * r / (1 - r).
    BigRational r = s / k;
    if (r < 1 && target > partial + term * r / (1 - r)) return false;
    term = term * s / k;
    partial += term;
  }
  return false;
}

}  // namespace cayley
