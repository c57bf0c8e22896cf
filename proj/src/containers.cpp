#include "cayley/containers.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

constexpr double kEps = 1e-9;

std::pair<const VertexSet&, const VertexSet&> sides(const Graph& g, Side side) {
  if (!g.is_bipartite())
    throw Error(ErrorKind::InvalidInput, "operation requires a bipartite graph");
  const Bipartition& p = *g.parts();
  if (side == Side::X) return {p.x, p.y};
  return {p.y, p.x};
}

int require_regular(const Graph& g) {
  int d = g.regular_degree();
  if (d <= 0) throw Error(ErrorKind::InvalidInput, "operation requires a regular graph");
  return d;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

ApproxParams ApproxParams::for_degree(int d) {
  ApproxParams p;
  p.d = d;
  if (d < 2) {
    p.phi = 0;
    p.psi = d;
  } else {
    const double lg = std::log2(static_cast<double>(d));
    p.phi = d - std::sqrt(static_cast<double>(d)) / lg;
    p.psi = d / lg;
  }
  p.phi_degenerate = p.phi <= 0 || d < 4;
  p.psi_degenerate = p.psi >= d - kEps;
  return p;
}

std::uint64_t record_seed(std::uint64_t master, std::uint64_t record) {
  return splitmix64(master ^ splitmix64(record + 0x632BE59BD9B4E019ULL));
}

int second_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    best = std::max(best, g.neighborhood(g.adj(v)).count());
  return best;
}

CoverResult greedy_cover(const Graph& g, const VertexSet& targets,
                         const VertexSet& pool) {
  CoverResult r;
  r.cover = VertexSet(g.vertex_count());
  if (targets.empty()) return r;
  r.a = -1;
  targets.for_each([&](int u) {
    int du = g.degree_into(u, pool);
    if (du == 0)
      throw Error(ErrorKind::InvalidInput,
                  "vertex " + std::to_string(u) + " has no neighbour in the pool");
    if (r.a < 0 || du < r.a) r.a = du;
  });
  pool.for_each([&](int v) { r.b = std::max(r.b, g.degree_into(v, targets)); });
  r.bound = pool.count() / static_cast<double>(r.a) * (1.0 + std::log(r.b));

  VertexSet uncovered = targets;
  while (!uncovered.empty()) {
    int best = -1, best_gain = 0;
    pool.for_each([&](int v) {
      int gain = g.degree_into(v, uncovered);
      if (gain > best_gain) {
        best = v;
        best_gain = gain;
      }
    });
    r.cover.insert(best);
    uncovered -= g.adj(best);
  }
  if (r.cover.count() > r.bound + kEps)
    throw Error(ErrorKind::TheoremViolation, "greedy cover exceeds the covering bound");
  return r;
}

ContractionState contract(const Graph& g, const VertexSet& c, Side side) {
  auto [own, other] = sides(g, side);
  if (!c.is_subset_of(other))
    throw Error(ErrorKind::InvalidInput, "C must lie inside the opposite side");
  ContractionState st;
  st.c = c;
  st.r = own;
  std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<SuperVertex> pool;
  std::vector<bool> alive;
  (other - c).for_each([&](int u) {
    SuperVertex sv{VertexSet(g.vertex_count()), VertexSet(g.vertex_count()),
                   VertexSet(g.vertex_count())};
    sv.contracted.insert(u);
    g.adj(u).for_each([&](int x) {
      int o = owner[x];
      if (o < 0) {
        sv.members.insert(x);
      } else if (alive[o]) {
        sv.members |= pool[o].members;
        sv.contracted |= pool[o].contracted;
        alive[o] = false;
      }
    });
    st.r -= g.adj(u);
    const int id = static_cast<int>(pool.size());
    sv.members.for_each([&](int x) { owner[x] = id; });
    pool.push_back(std::move(sv));
    alive.push_back(true);
    ++st.steps;
  });
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!alive[i]) continue;
    SuperVertex& sv = pool[i];
    sv.nbhd = g.neighborhood(sv.members) - sv.contracted;
    st.b.push_back(std::move(sv));
  }
  std::sort(st.b.begin(), st.b.end(), [](const SuperVertex& x, const SuperVertex& y) {
    return x.members.first() < y.members.first();
  });
  return st;
}

bool check_phi(const Graph& g, const ClosedSetRecord& rec, const VertexSet& f,
               double phi) {
  if (!f.is_subset_of(rec.nbhd)) return false;
  if (!g_alpha(g, rec, phi).is_subset_of(f)) return false;
  return rec.closure.is_subset_of(g.neighborhood(f));
}

PhiReport phi_approx_sample(const Graph& g, const ClosedSetRecord& rec,
                            const VertexSet& c, const PhiConfig& cfg) {
  auto [own, other] = sides(g, rec.side);
  (void)own;
  const int d = require_regular(g);
  if (!rec.boundary.is_subset_of(c) || !c.is_subset_of(other))
    throw Error(ErrorKind::InvalidInput, "C must contain the boundary and lie in Y");
  const ApproxParams params = ApproxParams::for_degree(d);
  PhiReport r;
  r.degenerate_phi = params.phi_degenerate;
  if (params.phi <= 0) {
    r.fallback = true;
    r.f = rec.nbhd;
    r.valid = check_phi(g, rec, r.f, params.phi);
    return r;
  }
  const int d2 = cfg.d2 > 0 ? cfg.d2 : second_degree(g);
  const double lg = std::log2(static_cast<double>(d));
  r.p = 60.0 * lg / d2;
  if (r.p >= 1) {
    r.p = 1;
    r.degenerate_p = true;
  }

  const ContractionState st = contract(g, c, rec.side);
  const VertexSet r_a = st.r & rec.closure;
  const VertexSet r_ac = st.r - rec.closure;
  std::vector<const SuperVertex*> b_a, b_ac;
  for (const auto& sv : st.b)
    (sv.members.is_subset_of(rec.closure) ? b_a : b_ac).push_back(&sv);

  const VertexSet pool = c & rec.nbhd;
  const VertexSet c_phi = g_alpha(g, rec, params.phi) & c;
  const double t = rec.t;
  r.threshold = {cfg.q0_factor * t / (lg * lg), cfg.grad_factor * t / (lg * lg),
                 cfg.uncovered_factor * t / std::pow(d, 7),
                 cfg.missed_factor * t / std::pow(d, 8)};

  std::mt19937_64 rng(cfg.seed);
  VertexSet nw(g.vertex_count());
  VertexSet q3(g.vertex_count());
  while (true) {
    ++r.draws;
    VertexSet q0(g.vertex_count());
    if (r.degenerate_p) {
      q0 = pool;
    } else {
      pool.for_each([&](int y) {
        if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < r.p) q0.insert(y);
      });
    }
    int grad = 0;
    q0.for_each([&](int y) { grad += g.degree_into(y, r_ac); });
    for (const SuperVertex* sv : b_ac) grad += sv->nbhd.intersection_count(q0);
    int uncovered = 0;
    nw = g.neighborhood(r_a & g.neighborhood(q0)) & c;
    for (const SuperVertex* sv : b_a) {
      if (sv->nbhd.intersects(q0))
        nw |= sv->nbhd;
      else
        ++uncovered;
    }
    q3 = c_phi - nw;
    r.measured = {static_cast<double>(q0.count()), static_cast<double>(grad),
                  static_cast<double>(uncovered), static_cast<double>(q3.count())};
    for (int i = 0; i < 4; ++i) r.holds[i] = r.measured[i] <= r.threshold[i] + kEps;
    r.accepted = r.holds[0] && r.holds[1] && r.holds[2] && r.holds[3];
    if (r.accepted || r.degenerate_p) break;
    if (r.draws >= cfg.max_retries) {
      std::ostringstream msg;
      msg << "phi sampler: no accepted draw in " << r.draws << " tries; last draw";
      for (int i = 0; i < 4; ++i)
        msg << " P" << i + 1 << '=' << r.measured[i] << "/" << r.threshold[i];
      throw Error(ErrorKind::SearchExhausted, msg.str());
    }
  }

  // Z1: everything decodable from Q0..Q3, including all of G_d outside C.
  VertexSet z1 = nw | q3;
  for (const SuperVertex* sv : b_a) z1 |= sv->contracted;
  z1 &= rec.nbhd;
  const VertexSet targets = r_a - g.neighborhood(z1);
  VertexSet z2(g.vertex_count());
  if (!targets.empty()) z2 = greedy_cover(g, targets, pool - z1).cover;
  r.z1 = z1.count();
  r.z2 = z2.count();
  r.f = z1 | z2;
  r.valid = check_phi(g, rec, r.f, params.phi);
  if (!r.valid)
    throw Error(ErrorKind::TheoremViolation, "phi sampler produced an invalid approximation");
  return r;
}

PsiApprox psi_approx(const Graph& g, const ClosedSetRecord& rec,
                     const VertexSet& f, double psi) {
  auto [own, other] = sides(g, rec.side);
  const int d = require_regular(g);
  PsiApprox out;
  out.f = f;
  // Loop 1: absorb N(u) for the least u in [A] with d_{G \ F'}(u) >= psi.
  while (true) {
    const VertexSet missing = rec.nbhd - out.f;
    int pick = -1;
    for (int u = rec.closure.first(); u >= 0; u = rec.closure.next(u + 1))
      if (g.degree_into(u, missing) >= psi - kEps) {
        pick = u;
        break;
      }
    if (pick < 0) break;
    out.f |= g.adj(pick);
    ++out.loop1;
  }
  out.s = VertexSet(g.vertex_count());
  own.for_each([&](int u) {
    if (g.degree_into(u, out.f) >= d - psi - kEps) out.s.insert(u);
  });
  // Loop 2: for the least w off F'' with d_S(w) > psi, shrink S by N(w);
  // a w inside G is moved into F'' instead, which keeps S over [A].
  while (true) {
    int pick = -1;
    const VertexSet off = other - out.f;
    for (int w = off.first(); w >= 0; w = off.next(w + 1))
      if (g.degree_into(w, out.s) > psi + kEps) {
        pick = w;
        break;
      }
    if (pick < 0) break;
    if (rec.nbhd.contains(pick)) {
      out.f.insert(pick);
      ++out.repairs;
    } else {
      out.s -= g.adj(pick);
    }
    ++out.loop2;
  }
  return out;
}

PsiCheck check_psi(const Graph& g, const ClosedSetRecord& rec,
                   const PsiApprox& approx, double psi) {
  auto [own, other] = sides(g, rec.side);
  const int d = require_regular(g);
  PsiCheck c;
  c.covers = rec.closure.is_subset_of(approx.s);
  c.inside = approx.f.is_subset_of(rec.nbhd);
  c.clause1 = true;
  approx.s.for_each([&](int u) {
    if (g.degree_into(u, approx.f) < d - psi - kEps) c.clause1 = false;
  });
  c.clause2 = true;
  const VertexSet outside = own - approx.s;
  (other - approx.f).for_each([&](int v) {
    if (g.degree_into(v, outside) < d - psi - kEps) c.clause2 = false;
  });
  c.valid = c.covers && c.inside && c.clause1 && c.clause2;
  c.lhs = approx.s.count();
  if (psi < d - kEps) {
    c.lemma_applicable = true;
    c.rhs = approx.f.count() + 2.0 * rec.t * psi / (d - psi);
    c.lemma = c.lhs <= c.rhs + kEps;
  }
  return c;
}

BoundaryReport boundary_container(const Graph& g, const ClosedSetRecord& rec,
                                  int d2) {
  auto [own, other] = sides(g, rec.side);
  const int d = require_regular(g);
  if (d2 <= 0) d2 = second_degree(g);
  BoundaryReport r;
  const double lg = d >= 2 ? std::log2(static_cast<double>(d)) : 0;
  r.target = lg > 0 ? rec.t * d2 / (lg * lg * lg) : 0;
  if (d <= 2) {
    r.fallback = true;
    r.c = rec.boundary;
    r.ratio = r.target > 0 ? r.c.count() / r.target : 0;
    return r;
  }

  // A_: trim [A] greedily by at most 4t/log^2 d vertices while |N^2| drops,
  // then close.
  VertexSet under = rec.closure;
  const int budget = static_cast<int>(std::floor(4.0 * rec.t / (lg * lg) + kEps));
  for (int step = 0; step < budget && under.count() > 1; ++step) {
    const int now = g.neighborhood(under, 2).count();
    int best = -1, best_size = now;
    under.for_each([&](int x) {
      VertexSet trial = under;
      trial.erase(x);
      int s = g.neighborhood(trial, 2).count();
      if (s < best_size) {
        best = x;
        best_size = s;
      }
    });
    if (best < 0) break;
    under.erase(best);
  }
  under = closure(g, under, rec.side).closure;
  r.trimmed = (rec.closure - under).count();

  const VertexSet g_under = g.neighborhood(under);
  VertexSet bd_under(g.vertex_count());
  const VertexSet not_under = own - under;
  g_under.for_each([&](int v) {
    if (g.adj(v).intersects(not_under)) bd_under.insert(v);
  });
  const VertexSet a0 = g.neighborhood(g_under) - under;

  VertexSet g_s(g.vertex_count());
  bd_under.for_each([&](int v) {
    if (2 * g.degree_into(v, a0) >= d) g_s.insert(v);
  });
  const VertexSet g_l = bd_under - g_s;
  const VertexSet z2 = greedy_cover(g, g_s, a0).cover;

  // M' = complement of G_ inside Y; A_2 = N^3(M') n A_.
  const VertexSet m_prime = other - g_under;
  const VertexSet a2 = g.neighborhood(m_prime, 3) & under;
  const VertexSet g2 = g_l & g.neighborhood(m_prime, 2);
  VertexSet coverable(g.vertex_count());
  g2.for_each([&](int v) {
    if (g.adj(v).intersects(a2)) coverable.insert(v);
  });
  const VertexSet z3 = greedy_cover(g, coverable, a2).cover;

  r.c = g.neighborhood(z2) | g.neighborhood(z3) |
        g.neighborhood(rec.closure - under);
  r.c &= other;
  const VertexSet missing = rec.boundary - r.c;
  r.residual = missing.count();
  r.c |= missing;
  r.z2 = z2.count();
  r.z3 = z3.count();
  r.ratio = r.target > 0 ? r.c.count() / r.target : 0;
  return r;
}

}  // namespace cayley
