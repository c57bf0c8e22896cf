#include "cayley/sumset.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "cayley/bigcount.hpp"
#include "cayley/errors.hpp"

namespace cayley {

VertexSet sumset(const GroupSpec& group, const VertexSet& a, const VertexSet& b) {
  VertexSet out(group.order());
  std::vector<int> bs = b.members();
  a.for_each([&](int x) {
    for (int y : bs) out.insert(group.add(x, y));
  });
  return out;
}

VertexSet iterated_sumset(const GroupSpec& group, const VertexSet& m,
                          const VertexSet& d, int i) {
  if (i < 0) throw Error(ErrorKind::InvalidInput, "negative sumset multiple");
  VertexSet cur = m;
  for (int k = 0; k < i; ++k) cur = sumset(group, cur, d);
  return cur;
}

VertexSet translate(const GroupSpec& group, const VertexSet& s, int shift) {
  VertexSet out(group.order());
  int neg = group.neg(shift);
  s.for_each([&](int x) { out.insert(group.add(x, neg)); });
  return out;
}

VertexSet SumsetStats::heavy(double alpha) const {
  VertexSet out(base.universe());
  const double threshold = base.count() / (2.0 * alpha);
  for (auto [u, r] : reps)
    if (r >= threshold) out.insert(u);
  return out;
}

SumsetStats sumset_stats(const GroupSpec& group, const VertexSet& d) {
  SumsetStats s;
  s.base = d;
  std::vector<int> e = d.members();
  VertexSet two(group.order());
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i; j < e.size(); ++j) {
      int u = group.add(e[i], e[j]);
      two.insert(u);
      if (i != j) ++s.reps[u];
    }
  s.doubling = two.count();
  return s;
}

Fact41Report fact41_check(const GroupSpec& group, const VertexSet& m,
                          const VertexSet& d, int i) {
  if (i < 2) throw Error(ErrorKind::InvalidInput, "fact check needs i >= 2");
  Fact41Report r;
  r.m = m.count();
  r.d = d.count();
  r.i = i;
  r.t = sumset(group, m, d).count() - r.m;
  r.lhs = iterated_sumset(group, m, d, i).count();
  r.rhs = r.m + std::pow(static_cast<double>(r.d), i) * r.t;
  r.holds = static_cast<double>(r.lhs) <= r.rhs;
  return r;
}

bool prp_inequality(const GroupSpec& group, const VertexSet& m,
                    const VertexSet& d, const VertexSet& m_prime, int j) {
  // |M' + jD| * |M|^j <= |M + D|^j * |M'|
  const BigCount mm = m.count();
  const BigCount md = sumset(group, m, d).count();
  const BigCount lhs = iterated_sumset(group, m_prime, d, j).count();
  return lhs * boost::multiprecision::pow(mm, static_cast<unsigned>(j)) <=
         boost::multiprecision::pow(md, static_cast<unsigned>(j)) * m_prime.count();
}

PrpWitness prp_witness_search(const GroupSpec& group, const VertexSet& m,
                              const VertexSet& d, int j, int cap) {
  if (m.empty() || d.empty())
    throw Error(ErrorKind::InvalidInput, "PRP search needs nonempty M and D");
  if (j < 0) throw Error(ErrorKind::InvalidInput, "PRP search needs j >= 0");
  const std::vector<int> elems = m.members();
  const int size = static_cast<int>(elems.size());
  if (size > cap)
    throw Error(ErrorKind::InstanceTooLarge,
                "PRP witness search capped at |M| <= " + std::to_string(cap));
  PrpWitness w;
  w.m = size;
  w.m_plus_d = sumset(group, m, d).count();
  w.j = j;
  const BigCount lhs_scale =
      boost::multiprecision::pow(BigCount(size), static_cast<unsigned>(j));
  const BigCount rhs_scale =
      boost::multiprecision::pow(BigCount(w.m_plus_d), static_cast<unsigned>(j));
  std::vector<int> pick;
  for (int k = size; k >= 1; --k) {
    // Lexicographic k-combinations of positions.
    pick.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      VertexSet sub(group.order());
      for (int p : pick) sub.insert(elems[p]);
      int lhs = iterated_sumset(group, sub, d, j).count();
      if (BigCount(lhs) * lhs_scale <= rhs_scale * k) {
        w.witness = std::move(sub);
        w.lhs = lhs;
        return w;
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == size - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int q = i + 1; q < k; ++q) pick[q] = pick[q - 1] + 1;
    }
  }
  throw Error(ErrorKind::TheoremViolation,
              "no PRP witness exists for this (M, D, j)");
}

const char* to_string(OlsonBranch b) {
  switch (b) {
    case OlsonBranch::Stabilized: return "stabilized";
    case OlsonBranch::Expanded: return "expanded";
    case OlsonBranch::Violated: return "violated";
  }
  return "?";
}

OlsonReport olson_check(const GroupSpec& group, const VertexSet& m,
                        const VertexSet& n) {
  if (m.empty() || n.empty())
    throw Error(ErrorKind::InvalidInput, "Olson check needs nonempty M and N");
  OlsonReport r;
  r.m = m.count();
  r.n = n.count();
  r.shift = n.contains(0) ? 0 : n.first();
  const VertexSet n0 = translate(group, n, r.shift);

  const VertexSet mn0 = sumset(group, m, n0);
  const VertexSet m2n0 = sumset(group, mn0, n0);
  if (m2n0 == mn0)
    r.branch = OlsonBranch::Stabilized;
  else if (2 * mn0.count() >= 2 * r.m + r.n)
    r.branch = OlsonBranch::Expanded;

  const VertexSet mn = sumset(group, m, n);
  r.m_plus_n = mn.count();
  const int m2n = sumset(group, mn, n).count();
  if (m2n == r.m_plus_n)
    r.corollary_branch = OlsonBranch::Stabilized;
  else if (2 * r.m_plus_n >= 2 * r.m + r.n)
    r.corollary_branch = OlsonBranch::Expanded;

  r.holds = r.branch != OlsonBranch::Violated &&
            r.corollary_branch != OlsonBranch::Violated;
  return r;
}

namespace {

double pruse2_bound(int m, int i, double c, int t) {
  return m + std::pow(2.0 * i, i + 1) * std::pow(c, i) * t;
}

int removal_budget(int t, double c) {
  return static_cast<int>(std::floor(t / c + 1e-12));
}

bool step_ok(const GroupSpec& group, const VertexSet& sub, const VertexSet& d,
             int i, int m, double c, int t) {
  return iterated_sumset(group, sub, d, i + 1).count() <=
         pruse2_bound(m, i, c, t) + 1e-9;
}

bool final_ok(const GroupSpec& group, const VertexSet& last, const VertexSet& d,
              int k, int m, double c, int t) {
  VertexSet cur = sumset(group, last, d);
  for (int i = 1; i <= k; ++i) {
    cur = sumset(group, cur, d);
    if (cur.count() > pruse2_bound(m, i, c, t) + 1e-9) return false;
  }
  return true;
}

}  // namespace

bool pruse2_chain_valid(const GroupSpec& group, const VertexSet& m,
                        const VertexSet& d, const std::vector<VertexSet>& chain,
                        double c) {
  if (chain.empty() || !(chain[0] == m)) return false;
  const int mm = m.count();
  const int t = sumset(group, m, d).count() - mm;
  const int budget = removal_budget(t, c);
  const int k = static_cast<int>(chain.size()) - 1;
  for (int i = 1; i <= k; ++i) {
    if (!chain[i].is_subset_of(chain[i - 1])) return false;
    if ((chain[i - 1] - chain[i]).count() > budget) return false;
    if (!step_ok(group, chain[i], d, i, mm, c, t)) return false;
  }
  return final_ok(group, chain.back(), d, k, mm, c, t);
}

Pruse2Result pruse2_witness_search(const GroupSpec& group, const VertexSet& m,
                                   const VertexSet& d, int k, double c,
                                   SearchMode mode, int cap) {
  if (m.empty() || d.empty())
    throw Error(ErrorKind::InvalidInput, "chain search needs nonempty M and D");
  if (c < 4) throw Error(ErrorKind::InvalidInput, "chain search needs c >= 4");
  if (k < 0) throw Error(ErrorKind::InvalidInput, "chain search needs k >= 0");
  Pruse2Result r;
  r.m = m.count();
  r.t = sumset(group, m, d).count() - r.m;
  r.c = c;
  r.k = k;
  r.mode = mode;
  if (mode == SearchMode::Exhaustive && r.m > cap)
    throw Error(ErrorKind::InstanceTooLarge,
                "exhaustive chain search capped at |M| <= " + std::to_string(cap));
  const int budget = removal_budget(r.t, c);
  std::vector<VertexSet> chain{m};

  if (mode == SearchMode::Greedy) {
    for (int i = 1; i <= k; ++i) {
      VertexSet cur = chain.back();
      int removed = 0;
      while (!step_ok(group, cur, d, i, r.m, c, r.t) && removed < budget &&
             cur.count() > 1) {
        int best = -1;
        int best_size = 0;
        cur.for_each([&](int x) {
          VertexSet trial = cur;
          trial.erase(x);
          int s = iterated_sumset(group, trial, d, i + 1).count();
          if (best < 0 || s < best_size) {
            best = x;
            best_size = s;
          }
        });
        cur.erase(best);
        ++removed;
      }
      chain.push_back(std::move(cur));
    }
    r.found = pruse2_chain_valid(group, m, d, chain, c);
    r.chain = std::move(chain);
    return r;
  }

  // Exhaustive DFS; at each level try removing 0, 1, ..., budget elements.
  std::function<bool(int)> dfs = [&](int i) -> bool {
    if (i > k) return final_ok(group, chain.back(), d, k, r.m, c, r.t);
    const std::vector<int> elems = chain.back().members();
    const int size = static_cast<int>(elems.size());
    for (int rm = 0; rm <= std::min(budget, size); ++rm) {
      std::vector<int> pick(static_cast<std::size_t>(rm));
      for (int q = 0; q < rm; ++q) pick[q] = q;
      while (true) {
        VertexSet sub = chain.back();
        for (int p : pick) sub.erase(elems[p]);
        if (step_ok(group, sub, d, i, r.m, c, r.t)) {
          chain.push_back(std::move(sub));
          if (dfs(i + 1)) return true;
          chain.pop_back();
        }
        int q = rm - 1;
        while (q >= 0 && pick[q] == size - rm + q) --q;
        if (q < 0) break;
        ++pick[q];
        for (int z = q + 1; z < rm; ++z) pick[z] = pick[z - 1] + 1;
      }
    }
    return false;
  };
  if (!dfs(1))
    throw Error(ErrorKind::TheoremViolation,
                "no valid chain exists for this (M, D, k, c)");
  r.found = true;
  r.chain = std::move(chain);
  return r;
}

VertexSet greedy_spanning_subset(const GroupSpec& group, const VertexSet& d) {
  VertexSet s(group.order());
  VertexSet span = subgroup_generated(group, s);
  d.for_each([&](int x) {
    if (span.contains(x)) return;
    s.insert(x);
    span = subgroup_generated(group, s);
  });
  return s;
}

ThinningResult thin_generators(const GroupSpec& group, const GeneratorSet& d,
                               const ThinningConfig& cfg) {
  if (cfg.alpha < 1)
    throw Error(ErrorKind::InvalidInput, "thinning needs alpha >= 1");
  if (!is_generating(group, d.elements()))
    throw Error(ErrorKind::InvalidInput, "thinning needs a generating set");
  ThinningResult r;
  const int dsize = d.size();
  r.precondition = d.doubling() <= cfg.alpha * dsize;

  std::mt19937_64 rng(cfg.seed);
  const double p = cfg.p();
  r.random_part = VertexSet(group.order());
  d.elements().for_each([&](int x) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < p) r.random_part.insert(x);
  });
  r.spanning = greedy_spanning_subset(group, d.elements());

  std::vector<int> ids;
  (r.random_part | r.spanning).for_each([&](int x) {
    ids.push_back(x);
    ids.push_back(group.neg(x));
  });
  r.thinned = make_generators(group, ids, /*symmetrize=*/false);
  const VertexSet& dp = r.thinned.elements();

  r.symmetric = true;
  dp.for_each([&](int x) { r.symmetric = r.symmetric && dp.contains(group.neg(x)); });
  r.generating = is_generating(group, dp);
  r.size = dp.count();
  r.size_doubled = r.thinned.doubling();
  r.size_window = r.size >= dsize / (20.0 * cfg.alpha) &&
                  r.size <= 2.0 * dsize / (5.0 * cfg.alpha);
  r.doubling = r.size_doubled >= cfg.alpha * r.size;
  return r;
}

InequalityCheck near_full_sumset_check(const GroupSpec& group,
                                       const VertexSet& d,
                                       const VertexSet& d_prime) {
  InequalityCheck c;
  const int dd = d.count();
  if (!d_prime.is_subset_of(d)) {
    c.note = "D' is not a subset of D";
    return c;
  }
  if (dd < 3) {
    c.note = "d < 3: log^2 d too small for the bound";
    return c;
  }
  const double lg = std::log2(static_cast<double>(dd));
  const int missing = (d - d_prime).count();
  if (missing > std::sqrt(static_cast<double>(dd)) / lg) {
    c.note = "|D \\ D'| exceeds sqrt(d)/log d";
    return c;
  }
  c.applicable = true;
  const int d2 = sumset(group, d, d).count();
  c.lhs = sumset(group, d, d_prime).count();
  c.rhs = d2 * (1.0 - 1.0 / (lg * lg));
  c.holds = c.lhs >= c.rhs - 1e-9;
  return c;
}

ExpansionReport basic_expansion_check(const CayleyGraph& cg, const VertexSet& m) {
  ExpansionReport r;
  const Graph& g = cg.graph();
  const GroupSpec& group = cg.group();
  const VertexSet& d = cg.generators().elements();
  const int dd = d.count();
  const int mm = m.count();

  const char* why = nullptr;
  const VertexSet* part = nullptr;
  if (!g.is_bipartite()) {
    why = "graph is not bipartite";
  } else if (!g.is_connected()) {
    why = "graph is not connected";
  } else if (m.empty()) {
    why = "M is empty";
  } else if (m.is_subset_of(g.parts()->x)) {
    part = &g.parts()->x;
  } else if (m.is_subset_of(g.parts()->y)) {
    part = &g.parts()->y;
  } else {
    why = "M straddles both parts";
  }
  if (part && 2 * mm > part->count()) {
    why = "|M| > |X|/2";
    part = nullptr;
  }
  if (!part) {
    r.basic.note = r.near_full.note = r.second_nbhd.note = why;
    return r;
  }

  const int md = sumset(group, m, d).count();
  const int d2 = sumset(group, d, d).count();
  const bool m2d_full = iterated_sumset(group, m, d, 2) == *part;

  // |2D| <= 2(alpha^2 - 1)|M|, i.e. |2D| |M| <= 2(|M+D|^2 - |M|^2).
  if (m2d_full) {
    r.basic.note = "M + 2D = X";
  } else {
    r.basic.applicable = true;
    r.basic.lhs = static_cast<double>(d2) * mm;
    r.basic.rhs = 2.0 * (static_cast<double>(md) * md - static_cast<double>(mm) * mm);
    r.basic.holds = r.basic.lhs <= r.basic.rhs;
  }

  // Best translate u + D' inside M.
  int best_u = -1;
  VertexSet best_dp(group.order());
  for (int u = 0; u < group.order(); ++u) {
    VertexSet dp(group.order());
    d.for_each([&](int x) {
      if (m.contains(group.add(u, x))) dp.insert(x);
    });
    if (best_u < 0 || dp.count() > best_dp.count()) {
      best_u = u;
      best_dp = std::move(dp);
    }
  }
  r.near_full = near_full_sumset_check(group, d, best_dp);

  if (dd < 3) {
    r.second_nbhd.note = "d < 3";
  } else if (m2d_full) {
    r.second_nbhd.note = "M + 2D = X";
  } else if (dd - best_dp.count() >
             std::sqrt(static_cast<double>(dd)) / std::log2(static_cast<double>(dd))) {
    r.second_nbhd.note = "M contains no u + D' with |D'| >= d - sqrt(d)/log d";
  } else {
    r.second_nbhd.applicable = true;
    r.second_nbhd.lhs = md;
    r.second_nbhd.rhs = mm + d2 / 6.0;
    r.second_nbhd.holds = 6 * md >= 6 * mm + d2;
  }
  return r;
}

}  // namespace cayley
