#include "cayley/constructions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>

#include "cayley/count.hpp"
#include "cayley/errors.hpp"

namespace cayley {

Gadget build_gadget(int d, std::uint64_t seed, int max_attempts) {
  if (d < 3)
    throw Error(ErrorKind::InvalidSpec,
                "gadget needs d >= 3 (2d(d-1) edges cannot connect 4d-2 vertices)");
  const int nx = 2 * d - 2;
  const int size = 4 * d - 2;
  std::vector<int> x_stubs, yz_stubs;
  for (int u = 0; u < nx; ++u)
    for (int k = 0; k < d; ++k) x_stubs.push_back(u);
  for (int v = nx; v < size; ++v)
    for (int k = 0; k < d - 1; ++k) yz_stubs.push_back(v);

  std::mt19937_64 rng(seed);
  Gadget out;
  out.d = d;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::shuffle(yz_stubs.begin(), yz_stubs.end(), rng);
    Graph g(size);
    bool simple = true;
    for (std::size_t k = 0; k < x_stubs.size() && simple; ++k) {
      if (g.adjacent(x_stubs[k], yz_stubs[k]))
        simple = false;
      else
        g.add_edge(x_stubs[k], yz_stubs[k]);
    }
    if (!simple) continue;
    int kappa = connectivity(g, ConnectivityMode::Vertex);
    if (kappa < d - 1) continue;
    out.graph = std::move(g);
    out.attempts = attempt;
    out.connectivity = kappa;
    return out;
  }
  throw Error(ErrorKind::SearchExhausted,
              "no (d-1)-connected gadget found in " + std::to_string(max_attempts) +
                  " attempts; try another seed");
}

namespace {

VertexSet block_range(const AppendixAConfig& cfg, int i, int lo, int hi) {
  if (i < 1 || i > cfg.t) throw Error(ErrorKind::InvalidInput, "block index out of range");
  VertexSet s(cfg.vertex_count());
  const int off = (i - 1) * cfg.block_size();
  for (int v = lo; v < hi; ++v) s.insert(off + v);
  return s;
}

}  // namespace

VertexSet AppendixA::x_block(int i) const { return block_range(cfg, i, 0, 2 * cfg.d - 2); }
VertexSet AppendixA::y_block(int i) const {
  return block_range(cfg, i, 2 * cfg.d - 2, 3 * cfg.d - 2);
}
VertexSet AppendixA::z_block(int i) const {
  return block_range(cfg, i, 3 * cfg.d - 2, 4 * cfg.d - 2);
}
VertexSet AppendixA::left(int i) const {
  return i % 2 ? x_block(i) : y_block(i) | z_block(i);
}
VertexSet AppendixA::right(int i) const {
  return i % 2 ? y_block(i) | z_block(i) : x_block(i);
}

AppendixA build_appendix_a(const AppendixAConfig& cfg, bool measure_vertex_connectivity) {
  if (cfg.d < 3) throw Error(ErrorKind::InvalidSpec, "appendix-a needs d >= 3");
  if (cfg.t < 2) throw Error(ErrorKind::InvalidSpec, "appendix-a needs t >= 2");
  AppendixA out;
  out.cfg = cfg;
  const int bs = cfg.block_size();
  const int d = cfg.d;
  Graph g(cfg.vertex_count());
  std::seed_seq base{static_cast<std::uint32_t>(cfg.gadget_seed),
                     static_cast<std::uint32_t>(cfg.gadget_seed >> 32)};
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(cfg.t));
  {
    std::vector<std::uint32_t> raw(2 * seeds.size());
    base.generate(raw.begin(), raw.end());
    for (std::size_t i = 0; i < seeds.size(); ++i)
      seeds[i] = (std::uint64_t{raw[2 * i]} << 32) | raw[2 * i + 1];
  }
  for (int i = 1; i <= cfg.t; ++i) {
    Gadget h = build_gadget(d, seeds[i - 1]);
    const int off = (i - 1) * bs;
    for (auto [u, v] : h.graph.edges()) g.add_edge(off + u, off + v);
    out.gadgets.push_back(std::move(h));
  }
  for (int i = 1; i <= cfg.t; ++i) {
    const int next = i % cfg.t + 1;
    for (int j = 0; j < d; ++j)
      g.add_edge((i - 1) * bs + 3 * d - 2 + j, (next - 1) * bs + 2 * d - 2 + j);
  }
  g.detect_bipartition();
  if (g.regular_degree() != d)
    throw Error(ErrorKind::TheoremViolation, "appendix-a graph is not d-regular");
  out.edge_connectivity = connectivity(g, ConnectivityMode::Edge);
  if (measure_vertex_connectivity)
    out.vertex_connectivity = connectivity(g, ConnectivityMode::Vertex);
  out.graph = std::move(g);
  return out;
}

namespace {

void validate_intervals(const AppendixAConfig& cfg, const std::vector<BlockInterval>& s) {
  std::vector<BlockInterval> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    auto [lo, hi] = sorted[k];
    if (lo < 1 || hi > cfg.t || lo > hi)
      throw Error(ErrorKind::InvalidInput, "interval out of range");
    if (lo % 2 == 0 || hi % 2 == 0)
      throw Error(ErrorKind::InvalidInput, "interval endpoints must be odd block indices");
    if (k > 0 && sorted[k - 1].second >= lo)
      throw Error(ErrorKind::InvalidInput, "intervals must be disjoint");
  }
  if (cfg.t % 2 == 1) {
    bool touches = false;
    for (auto [lo, hi] : sorted) touches = touches || lo == 1 || hi == cfg.t;
    if (!touches)
      throw Error(ErrorKind::InvalidInput,
                  "for odd t an interval must contain block 1 or block t");
  }
}

std::vector<bool> block_membership(int t, const std::vector<BlockInterval>& s) {
  std::vector<bool> in(static_cast<std::size_t>(t) + 1, false);
  for (auto [lo, hi] : s)
    for (int i = lo; i <= hi; ++i) in[i] = true;
  return in;
}

}  // namespace

MaximalSetCheck appendix_a_maximal_sets(const AppendixA& a,
                                        const std::vector<BlockInterval>& s) {
  validate_intervals(a.cfg, s);
  const Graph& g = a.graph;
  const std::vector<bool> in = block_membership(a.cfg.t, s);
  MaximalSetCheck r;
  r.c = static_cast<int>(s.size());
  r.m = VertexSet(g.vertex_count());
  for (int i = 1; i <= a.cfg.t; ++i) r.m |= in[i] ? a.left(i) : a.right(i);
  r.independent = !g.neighborhood(r.m).intersects(r.m);
  r.maximal = (r.m | g.neighborhood(r.m)).count() == g.vertex_count();
  r.size_ok = r.m.count() >= a.cfg.n() - 2 * r.c;
  return r;
}

std::vector<std::vector<BlockInterval>> appendix_a_interval_sets(const AppendixA& a) {
  const int t = a.cfg.t;
  std::vector<std::vector<BlockInterval>> out;
  std::vector<BlockInterval> cur;
  std::function<void(int)> grow = [&](int from) {
    bool ok = true;
    try {
      validate_intervals(a.cfg, cur);
    } catch (const Error&) {
      ok = false;
    }
    if (ok) out.push_back(cur);
    for (int lo = from; lo <= t; lo += 2)
      for (int hi = lo; hi <= t; hi += 2) {
        cur.emplace_back(lo, hi);
        grow(hi + 2);
        cur.pop_back();
      }
  };
  grow(1);
  std::sort(out.begin(), out.end());
  return out;
}

DisjointnessReport appendix_a_classes_disjoint(const AppendixA& a) {
  const Graph& g = a.graph;
  const int t = a.cfg.t;
  const auto sets = appendix_a_interval_sets(a);
  DisjointnessReport r;
  for (std::size_t p = 0; p < sets.size(); ++p)
    for (std::size_t q = p + 1; q < sets.size(); ++q) {
      ++r.pairs;
      const auto in1 = block_membership(t, sets[p]);
      const auto in2 = block_membership(t, sets[q]);
      std::vector<VertexSet> need;
      for (int i = 1; i <= t; ++i) {
        need.push_back(in1[i] ? a.left(i) : a.right(i));
        if (in1[i] != in2[i]) need.push_back(in2[i] ? a.left(i) : a.right(i));
      }
      // Independent transversal: one vertex per requirement, pairwise
      // nonadjacent (repeats allowed).
      VertexSet chosen(g.vertex_count());
      std::function<bool(std::size_t)> pick = [&](std::size_t k) -> bool {
        if (k == need.size()) return true;
        if (need[k].intersects(chosen)) return pick(k + 1);
        const VertexSet blocked = g.neighborhood(chosen);
        for (int v : (need[k] - blocked).members()) {
          chosen.insert(v);
          if (pick(k + 1)) return true;
          chosen.erase(v);
        }
        return false;
      };
      if (pick(0)) {
        if (r.disjoint) {
          r.disjoint = false;
          r.first = static_cast<int>(p);
          r.second = static_cast<int>(q);
          r.witness = chosen;
        }
      }
    }
  return r;
}

CayleyGraph build_appendix_b(const AppendixBConfig& cfg) {
  if (cfg.d < 1 || cfg.d % 2 == 0)
    throw Error(ErrorKind::InvalidSpec, "appendix-b needs an odd d >= 1");
  if (cfg.d + 1 > cfg.n)
    throw Error(ErrorKind::InvalidSpec, "appendix-b needs d + 1 <= n");
  const int m = 2 * cfg.n;
  GroupSpec group = make_group({m});
  std::vector<int> ids;
  for (int i = 0; i <= cfg.d; ++i) ids.push_back(((-cfg.d + 2 * i) % m + m) % m);
  return build_cayley(group, make_generators(group, ids));
}

bool is_cyclic_progression(const VertexSet& s, int modulus, int step, int* start) {
  if (s.empty()) return false;
  const int k = s.count();
  const int first = s.first();
  const int period = modulus / std::gcd(modulus, step);
  if (k > period) return false;
  auto at = [&](int x, int j) { return ((x + j * step) % modulus + modulus) % modulus; };
  if (k == period) {
    for (int j = 0; j < k; ++j)
      if (!s.contains(at(first, j))) return false;
    if (start) *start = first;
    return true;
  }
  int begin = -1;
  s.for_each([&](int x) {
    if (begin < 0 && !s.contains(at(x, -1))) begin = x;
  });
  if (begin < 0) return false;
  for (int j = 0; j < k; ++j)
    if (!s.contains(at(begin, j))) return false;
  if (start) *start = begin;
  return true;
}

AppendixBReport appendix_b_structure_check(const AppendixBConfig& cfg) {
  const CayleyGraph cg = build_appendix_b(cfg);
  const Graph& g = cg.graph();
  const int m = 2 * cfg.n;
  AppendixBReport r;
  const auto records = enumerate_small_2linked_closed(g, Side::X);
  r.records = static_cast<int>(records.size());
  for (const auto& rec : records) {
    r.intervals = r.intervals && is_cyclic_progression(rec.closure, m, 2);
    r.progressions = r.progressions && is_cyclic_progression(rec.nbhd, m, 2);
    r.excess_is_d = r.excess_is_d && rec.g == rec.a + cfg.d;
    r.table[{rec.a, rec.g}] += preimage_count(g, rec);

    // Fraction of subsets of [A] whose neighbourhood is all of G.
    const std::vector<int> c = rec.closure.members();
    const int k = static_cast<int>(c.size());
    std::vector<std::uint32_t> cover;
    rec.nbhd.for_each([&](int y) {
      std::uint32_t mask = 0;
      for (int i = 0; i < k; ++i)
        if (g.adjacent(c[i], y)) mask |= std::uint32_t{1} << i;
      cover.push_back(mask);
    });
    std::uint64_t full = 0;
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << k); ++a)
      full += std::all_of(cover.begin(), cover.end(),
                          [a](std::uint32_t mask) { return (mask & a) != 0; });
    r.min_full_fraction =
        std::min(r.min_full_fraction, static_cast<double>(full) / std::ldexp(1.0, k));
  }
  for (const auto& [key, count] : r.table) {
    auto [a, gsize] = key;
    if (gsize - a != cfg.d && count != 0) r.table_zero_elsewhere = false;
    if (count != 0)
      r.ratio[key] = count.convert_to<double>() /
                     (cfg.n * std::ldexp(1.0, gsize - cfg.d));
  }
  return r;
}

}  // namespace cayley
