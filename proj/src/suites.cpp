#include "cayley/suites.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "cayley/constructions.hpp"
#include "cayley/containers.hpp"
#include "cayley/corpus.hpp"
#include "cayley/count.hpp"
#include "cayley/errors.hpp"
#include "cayley/sumset.hpp"

namespace cayley {

void SuiteResult::violation(const std::string& what) {
  passed = false;
  ++violations;
  if (failures.size() < 20) failures.push_back(what);
}

json SuiteResult::to_json() const {
  return json{{"suite", name},     {"passed", passed},     {"checked", checked},
              {"violations", violations}, {"failures", failures}, {"details", details}};
}

namespace {

int pick(int value, int fallback) { return value > 0 ? value : fallback; }
double pick(double value, double fallback) { return value > 0 ? value : fallback; }

std::string str(const BigCount& c) { return to_decimal(c); }

/// All subsets of the group with size in [lo, hi], by increasing mask order
/// within each size.
std::vector<VertexSet> subsets_by_size(int order, int lo, int hi) {
  std::vector<VertexSet> out;
  std::vector<int> idx;
  for (int k = lo; k <= std::min(hi, order); ++k) {
    idx.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      VertexSet s(order);
      for (int v : idx) s.insert(v);
      out.push_back(std::move(s));
      int i = k - 1;
      while (i >= 0 && idx[i] == order - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int q = i + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
    if (k == 0) continue;
  }
  return out;
}

std::vector<GroupSpec> groups_up_to(int max_order) {
  std::vector<GroupSpec> out;
  for (int order = 2; order <= max_order; ++order)
    for (auto& g : enumerate_abelian_groups(order)) out.push_back(std::move(g));
  return out;
}

// Connected bipartite graphs with side n <= max_side used by the
// counting-identity suites.
struct NamedGraph {
  std::string name;
  Graph graph;
};

std::vector<NamedGraph> bipartite_corpus(int max_side, int max_cayley_order) {
  std::vector<NamedGraph> out;
  for_each_cayley_graph(2, max_cayley_order, [&](const CayleyGraph& cg) {
    const Graph& g = cg.graph();
    if (g.is_bipartite() && g.is_connected() && g.vertex_count() / 2 <= max_side)
      out.push_back({describe(cg), g});
  });
  for (int k = 2; k <= max_side; ++k)
    out.push_back({"C" + std::to_string(2 * k), cycle_graph(2 * k).graph()});
  for (int d = 1; d <= std::min(6, max_side); ++d)
    out.push_back({"K" + std::to_string(d) + "," + std::to_string(d),
                   complete_bipartite(d).graph()});
  for (int n = 8; n <= max_side; ++n)
    for (int d = 3; d + 1 <= n; d += 2)
      out.push_back({"appendix-b n=" + std::to_string(n) + " d=" + std::to_string(d),
                     build_appendix_b({n, d}).graph()});
  return out;
}

std::vector<std::pair<int, int>> default_instances(const SuiteOptions& o) {
  if (!o.instances.empty()) return o.instances;
  return {{8, 3}, {16, 5}, {32, 7}};
}

// ---------------------------------------------------------------- counting

SuiteResult suite_engine(const SuiteOptions& o) {
  SuiteResult r;
  const int max_order = pick(o.max_order, 16);
  const int max_vertices = pick(o.max_vertices, 24);
  auto check = [&](const std::string& name, const Graph& g) {
    ++r.checked;
    BigCount a = count_independent_sets(g);
    BigCount b = count_independent_sets_bruteforce(g);
    if (a != b) r.violation(name + ": branching " + str(a) + " != brute force " + str(b));
  };
  std::int64_t cayley = 0;
  for_each_cayley_graph(2, std::min(max_order, max_vertices), [&](const CayleyGraph& cg) {
    ++cayley;
    check(describe(cg), cg.graph());
  });
  for (int n = 3; n <= max_vertices; ++n) check("C" + std::to_string(n), cycle_graph(n).graph());
  for (int d = 1; d <= 6 && 2 * d <= max_vertices; ++d)
    check("K" + std::to_string(d) + "," + std::to_string(d), complete_bipartite(d).graph());
  r.details = {{"cayley_graphs", cayley}, {"max_order", max_order},
               {"max_vertices", max_vertices}};
  return r;
}

SuiteResult suite_lucas(const SuiteOptions& o) {
  SuiteResult r;
  const int hi = pick(o.max_vertices, 30);
  for (int n = 3; n <= hi; ++n) {
    ++r.checked;
    BigCount i = count_independent_sets(cycle_graph(n).graph());
    if (i != lucas(n))
      r.violation("C" + std::to_string(n) + ": i = " + str(i) + ", L = " + str(lucas(n)));
  }
  r.details = {{"range", {3, hi}}};
  return r;
}

SuiteResult suite_kdd(const SuiteOptions& o) {
  SuiteResult r;
  const int hi = pick(o.max_d, 6);
  json rows = json::array();
  for (int d = 1; d <= hi; ++d) {
    ++r.checked;
    BigCount i = count_independent_sets(complete_bipartite(d).graph());
    BigCount expect = pow2(static_cast<unsigned>(d + 1)) - 1;
    rows.push_back({{"d", d}, {"i", str(i)}});
    if (i != expect) r.violation("K" + std::to_string(d) + ": i = " + str(i));
  }
  r.details = {{"rows", rows}};
  return r;
}

SuiteResult suite_zhao(const SuiteOptions& o) {
  SuiteResult r;
  const int max_vertices = pick(o.max_vertices, 14);
  for_each_cayley_graph(2, max_vertices, [&](const CayleyGraph& cg) {
    ++r.checked;
    const BigCount i = count_independent_sets(cg.graph());
    const CayleyGraph cover = times_k2(cg);
    const BigCount ic = count_independent_sets(cover.graph());
    if (ic < i * i)
      r.violation(describe(cg) + ": i(G x K2) = " + str(ic) + " < " + str(i * i));
    const BigCount generic = count_independent_sets(times_k2(cg.graph()));
    if (generic != ic)
      r.violation(describe(cg) + ": Cayley cover and tensor cover disagree");
  });
  ++r.checked;
  const BigCount c5 = count_independent_sets(cycle_graph(5).graph());
  const BigCount c10 = count_independent_sets(times_k2(cycle_graph(5)).graph());
  if (c10 != 123 || c5 != 11 || c10 < c5 * c5)
    r.violation("C5 x K2: i = " + str(c10) + ", i(C5)^2 = " + str(c5 * c5));
  r.details = {{"max_vertices", max_vertices}, {"c5", str(c5)}, {"c5xk2", str(c10)}};
  return r;
}

SuiteResult suite_eqsumm(const SuiteOptions& o) {
  SuiteResult r;
  const int max_side = pick(o.max_side, 14);
  json tight = nullptr;
  double best = 0;
  for (const auto& [name, g] : bipartite_corpus(max_side, pick(o.max_order, 16))) {
    ++r.checked;
    const int n = g.vertex_count() / 2;
    const BigCount i = count_independent_sets(g);
    const BigCount bound = bipartite_bound_sum(g);
    if (i > bound) r.violation(name + ": i = " + str(i) + " > " + str(bound));
    const int alpha = independence_number(g);
    if (alpha != n)
      r.violation(name + ": independence number " + std::to_string(alpha) + " != n");
    double ratio = BigRational(i, bound).convert_to<double>();
    if (ratio > best) {
      best = ratio;
      tight = {{"graph", name}, {"i", str(i)}, {"bound", str(bound)}};
    }
  }
  r.details = {{"max_side", max_side}, {"tightest", tight}, {"max_ratio", best}};
  return r;
}

SuiteResult suite_cluster(const SuiteOptions& o) {
  SuiteResult r;
  const int max_side = pick(o.max_side, 14);
  std::int64_t closed_holds = 0;
  for (const auto& [name, g] : bipartite_corpus(max_side, pick(o.max_order, 16))) {
    ++r.checked;
    const BigCount i = count_independent_sets(g);
    const ClusterBound cb = cluster_bound(g);
    if (!exp_bound_holds(i, cb.n, cb.sum))
      r.violation(name + ": i = " + str(i) + " exceeds 2^(n+1) exp(sum) ~ " +
                  std::to_string(cb.bound));
    closed_holds += exp_bound_holds(i, cb.n, cb.sum_closed);
  }
  r.details = {{"max_side", max_side}, {"closed_only_variant_holds", closed_holds}};
  return r;
}

SuiteResult suite_trend(const SuiteOptions& o) {
  SuiteResult r;
  const int max_order = pick(o.max_order, 16);
  double best_all = 0, best_dense = 0;
  json arg_all, arg_dense;
  std::int64_t complete = 0;
  for_each_cayley_graph(2, max_order, [&](const CayleyGraph& cg) {
    const Graph& g = cg.graph();
    if (!g.is_connected()) return;
    ++r.checked;
    const BigCount i = count_independent_sets(g);
    const double n = g.vertex_count() / 2.0;
    const double ratio = std::exp2(log2_of(i) - (n + 1));
    if (ratio > best_all) {
      best_all = ratio;
      arg_all = {{"graph", describe(cg)}, {"i", str(i)}, {"ratio", ratio}};
    }
    if (!g.is_bipartite()) return;
    const int half = g.vertex_count() / 2;
    if (g.edge_count() == half * half) {
      ++complete;
      if (i != pow2(static_cast<unsigned>(half + 1)) - 1)
        r.violation(describe(cg) + ": complete bipartite but i = " + str(i));
    }
    if (cg.degree() >= std::log2(n)) {
      if (ratio > best_dense) {
        best_dense = ratio;
        arg_dense = {{"graph", describe(cg)}, {"i", str(i)}, {"ratio", ratio}};
      }
      if (ratio > 4) r.violation(describe(cg) + ": ratio " + std::to_string(ratio) + " > 4");
    }
  });
  r.details = {{"max_order", max_order}, {"max_ratio", arg_all},
               {"max_ratio_bipartite_dense", arg_dense}, {"complete_bipartite", complete}};
  return r;
}

// ---------------------------------------------------------------- sumsets

SuiteResult suite_olson(const SuiteOptions& o) {
  SuiteResult r;
  const int max_order = pick(o.max_order, 10);
  std::map<std::string, std::int64_t> branches;
  for (const GroupSpec& group : groups_up_to(max_order)) {
    const auto sets = subsets_by_size(group.order(), 1, group.order());
    for (const auto& m : sets)
      for (const auto& n : sets) {
        ++r.checked;
        OlsonReport rep = olson_check(group, m, n);
        ++branches[to_string(rep.branch)];
        if (!rep.holds)
          r.violation(group.to_string() + ": M=" + std::to_string(m.first()) + "... |M|=" +
                      std::to_string(rep.m) + " |N|=" + std::to_string(rep.n));
      }
  }
  r.details = {{"max_order", max_order}, {"branches", branches}};
  return r;
}

SuiteResult suite_prp(const SuiteOptions& o) {
  SuiteResult r;
  const int max_order = pick(o.max_order, 12);
  const int max_size = pick(o.max_size, 4);
  const int j = pick(o.j, 2);
  std::int64_t proper = 0;
  for (const GroupSpec& group : groups_up_to(max_order)) {
    const auto sets = subsets_by_size(group.order(), 1, max_size);
    for (const auto& m : sets)
      for (const auto& d : sets) {
        ++r.checked;
        try {
          PrpWitness w = prp_witness_search(group, m, d, j);
          if (!prp_inequality(group, m, d, w.witness, j))
            r.violation(group.to_string() + ": returned witness fails the inequality");
          proper += w.witness.count() < w.m;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::TheoremViolation) throw;
          r.violation(group.to_string() + ": " + e.what());
        }
      }
  }
  r.details = {{"max_order", max_order}, {"max_size", max_size}, {"j", j},
               {"proper_subset_witnesses", proper}};
  return r;
}

SuiteResult suite_pruse2(const SuiteOptions& o) {
  SuiteResult r;
  const int max_order = pick(o.max_order, 12);
  const int max_m = pick(o.max_m, 8);
  const int max_d = pick(o.max_d, 3);
  const int max_k = o.max_k >= 0 ? o.max_k : 2;
  const double c = pick(o.c, 4.0);
  std::int64_t trimmed = 0;
  for (const GroupSpec& group : groups_up_to(max_order)) {
    const auto ms = subsets_by_size(group.order(), 1, max_m);
    const auto ds = subsets_by_size(group.order(), 1, max_d);
    for (const auto& m : ms)
      for (const auto& d : ds)
        for (int k = 0; k <= max_k; ++k) {
          ++r.checked;
          try {
            Pruse2Result res = pruse2_witness_search(group, m, d, k, c);
            if (!pruse2_chain_valid(group, m, d, res.chain, c))
              r.violation(group.to_string() + ": returned chain is invalid");
            trimmed += res.chain.back().count() < res.m;
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::TheoremViolation) throw;
            r.violation(group.to_string() + " k=" + std::to_string(k) + ": " + e.what());
          }
        }
  }
  r.details = {{"max_order", max_order}, {"max_m", max_m}, {"max_d", max_d},
               {"max_k", max_k}, {"c", c}, {"chains_with_removals", trimmed}};
  return r;
}

SuiteResult suite_fact41(const SuiteOptions& o) {
  SuiteResult r;
  const int samples = pick(o.samples, 10000);
  const int max_order = pick(o.max_order, 64);
  const std::vector<GroupSpec> groups = groups_up_to(max_order);
  std::mt19937_64 rng(o.seed);
  auto random_set = [&](int order) {
    std::uniform_real_distribution<double> dens(0.02, 0.5);
    const double p = dens(rng);
    VertexSet s(order);
    std::uniform_real_distribution<double> u(0, 1);
    for (int v = 0; v < order; ++v)
      if (u(rng) < p) s.insert(v);
    if (s.empty()) s.insert(std::uniform_int_distribution<int>(0, order - 1)(rng));
    return s;
  };
  for (int k = 0; k < samples; ++k) {
    const GroupSpec& group =
        groups[std::uniform_int_distribution<std::size_t>(0, groups.size() - 1)(rng)];
    const VertexSet m = random_set(group.order());
    const VertexSet d = random_set(group.order());
    const int i = std::uniform_int_distribution<int>(2, 3)(rng);
    ++r.checked;
    Fact41Report rep = fact41_check(group, m, d, i);
    if (!rep.holds)
      r.violation(group.to_string() + ": |M+" + std::to_string(i) + "D| = " +
                  std::to_string(rep.lhs) + " > " + std::to_string(rep.rhs));
  }
  r.details = {{"samples", samples}, {"max_order", max_order}, {"seed", o.seed}};
  return r;
}

SuiteResult suite_thinning(const SuiteOptions& o) {
  SuiteResult r;
  const int seeds = pick(o.seeds, 100);
  const double alpha = pick(o.alpha, 2.0);
  const int modulus = pick(o.max_order, 1024);
  const int k = pick(o.max_d, 64);
  GroupSpec group = make_group({modulus});
  std::vector<int> ids;
  for (int x = 1; x <= k; ++x) {
    ids.push_back(x);
    ids.push_back(modulus - x);
  }
  const GeneratorSet d = make_generators(group, ids);
  int structural = 0, window = 0, doubling = 0;
  bool precondition = true;
  json sizes = json::array();
  for (int s = 0; s < seeds; ++s) {
    ThinningConfig cfg;
    cfg.alpha = alpha;
    cfg.seed = o.seed + static_cast<std::uint64_t>(s);
    ThinningResult t = thin_generators(group, d, cfg);
    precondition = t.precondition;
    ++r.checked;
    structural += t.symmetric && t.generating;
    window += t.size_window;
    doubling += t.doubling;
    sizes.push_back(t.size);
  }
  if (structural != seeds)
    r.violation("symmetry/generation held for " + std::to_string(structural) + "/" +
                std::to_string(seeds) + " seeds");
  if (10 * window < 9 * seeds)
    r.violation("size window held for only " + std::to_string(window) + "/" + std::to_string(seeds));
  if (10 * doubling < 9 * seeds)
    r.violation("doubling held for only " + std::to_string(doubling) + "/" + std::to_string(seeds));
  r.details = {{"modulus", modulus}, {"generators", 2 * k}, {"alpha", alpha},
               {"doubling_of_D", d.doubling()}, {"precondition", precondition},
               {"symmetric_and_generating", structural}, {"size_window", window},
               {"doubling", doubling}, {"sizes", sizes}};
  return r;
}

// ---------------------------------------------------------------- containers

SuiteResult suite_cover(const SuiteOptions& o) {
  SuiteResult r;
  const int samples = pick(o.samples, 1000);
  std::mt19937_64 rng(o.seed);
  double worst = 0;
  for (int k = 0; k < samples; ++k) {
    const int na = std::uniform_int_distribution<int>(1, 200)(rng);
    const int nb = std::uniform_int_distribution<int>(1, 200)(rng);
    const double p = std::uniform_real_distribution<double>(0.005, 0.3)(rng);
    Graph g(na + nb);
    std::uniform_real_distribution<double> u(0, 1);
    for (int a = 0; a < na; ++a) {
      bool any = false;
      for (int b = 0; b < nb; ++b)
        if (u(rng) < p) {
          g.add_edge(a, na + b);
          any = true;
        }
      if (!any) g.add_edge(a, na + std::uniform_int_distribution<int>(0, nb - 1)(rng));
    }
    const VertexSet targets = VertexSet::from_range(na + nb, std::views::iota(0, na));
    const VertexSet pool = targets.complement();
    ++r.checked;
    try {
      CoverResult c = greedy_cover(g, targets, pool);
      if (!targets.is_subset_of(g.neighborhood(c.cover)))
        r.violation("instance " + std::to_string(k) + ": cover misses a target");
      worst = std::max(worst, c.cover.count() / c.bound);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TheoremViolation) throw;
      r.violation("instance " + std::to_string(k) + ": " + e.what());
    }
  }
  r.details = {{"samples", samples}, {"seed", o.seed}, {"max_size_over_bound", worst}};
  return r;
}

struct RecordSet {
  std::string name;
  CayleyGraph cg;
  std::vector<ClosedSetRecord> records;
};

std::vector<RecordSet> record_sets(const SuiteOptions& o) {
  std::vector<RecordSet> out;
  for (auto [n, d] : default_instances(o)) {
    RecordSet rs;
    rs.name = "appendix-b n=" + std::to_string(n) + " d=" + std::to_string(d);
    rs.cg = build_appendix_b({n, d});
    rs.records = enumerate_small_2linked_closed(rs.cg.graph(), Side::X);
    out.push_back(std::move(rs));
  }
  return out;
}

SuiteResult suite_phi(const SuiteOptions& o) {
  SuiteResult r;
  const int seeds = pick(o.seeds, 5);
  const int retries = pick(o.retries, 100);
  json per = json::array();
  for (const RecordSet& rs : record_sets(o)) {
    const Graph& g = rs.cg.graph();
    const double phi = ApproxParams::for_degree(rs.cg.degree()).phi;
    std::vector<BoundaryReport> containers;
    for (const auto& rec : rs.records) containers.push_back(boundary_container(g, rec));
    for (int s = 0; s < seeds; ++s) {
      const std::uint64_t master = o.seed + static_cast<std::uint64_t>(s);
      int ok = 0, exhausted = 0, degenerate = 0, fallback = 0;
      for (std::size_t k = 0; k < rs.records.size(); ++k) {
        ++r.checked;
        PhiConfig cfg;
        cfg.seed = record_seed(master, k);
        cfg.max_retries = retries;
        cfg.d2 = rs.cg.generators().doubling();
        try {
          PhiReport rep = phi_approx_sample(g, rs.records[k], containers[k].c, cfg);
          if (!check_phi(g, rs.records[k], rep.f, phi))
            r.violation(rs.name + " record " + std::to_string(k) + ": invalid F");
          else
            ++ok;
          degenerate += rep.degenerate_p;
          fallback += rep.fallback;
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::SearchExhausted)
            ++exhausted;
          else if (e.kind() == ErrorKind::TheoremViolation)
            r.violation(rs.name + " record " + std::to_string(k) + ": " + e.what());
          else
            throw;
        }
      }
      const int total = static_cast<int>(rs.records.size());
      if (100 * ok < 99 * total)
        r.violation(rs.name + " seed " + std::to_string(master) + ": success " +
                    std::to_string(ok) + "/" + std::to_string(total));
      per.push_back({{"instance", rs.name}, {"seed", master}, {"records", total},
                     {"valid", ok}, {"retries_exhausted", exhausted},
                     {"degenerate_p", degenerate}, {"fallback", fallback}});
    }
  }
  r.details = {{"runs", per}, {"retries", retries}};
  return r;
}

SuiteResult suite_psi(const SuiteOptions& o, bool lemma_focus) {
  SuiteResult r;
  json per = json::array();
  for (const RecordSet& rs : record_sets(o)) {
    const Graph& g = rs.cg.graph();
    const ApproxParams params = ApproxParams::for_degree(rs.cg.degree());
    int valid = 0, lemma_checked = 0, lemma_ok = 0, skipped = 0, repairs = 0;
    double worst_slack = -1e300;
    for (std::size_t k = 0; k < rs.records.size(); ++k) {
      const ClosedSetRecord& rec = rs.records[k];
      std::vector<VertexSet> inputs{rec.nbhd};
      PhiConfig cfg;
      cfg.seed = record_seed(o.seed, k);
      cfg.d2 = rs.cg.generators().doubling();
      inputs.push_back(phi_approx_sample(g, rec, boundary_container(g, rec).c, cfg).f);
      for (const VertexSet& f : inputs) {
        ++r.checked;
        PsiApprox approx = psi_approx(g, rec, f, params.psi);
        PsiCheck c = check_psi(g, rec, approx, params.psi);
        repairs += approx.repairs;
        if (!c.valid) {
          if (!lemma_focus)
            r.violation(rs.name + " record " + std::to_string(k) + ": invalid (S, F)");
        } else {
          ++valid;
        }
        if (!c.lemma_applicable) {
          ++skipped;
          continue;
        }
        ++lemma_checked;
        worst_slack = std::max(worst_slack, c.lhs - c.rhs);
        if (c.lemma)
          ++lemma_ok;
        else
          r.violation(rs.name + " record " + std::to_string(k) + ": |S| = " +
                      std::to_string(c.lhs) + " > " + std::to_string(c.rhs));
      }
    }
    per.push_back({{"instance", rs.name}, {"records", rs.records.size()},
                   {"psi", params.psi}, {"degenerate_psi", params.psi_degenerate},
                   {"valid", valid}, {"lemma_checked", lemma_checked},
                   {"lemma_holds", lemma_ok}, {"lemma_skipped", skipped},
                   {"repairs", repairs},
                   {"max_lhs_minus_rhs", lemma_checked ? json(worst_slack) : json(nullptr)}});
  }
  r.details = {{"runs", per}, {"seed", o.seed}};
  return r;
}

// ---------------------------------------------------------------- constructions

SuiteResult suite_appendix_a(const SuiteOptions& o) {
  SuiteResult r;
  const int d = pick(o.d, 3);
  std::vector<int> ts = o.ts.empty() ? std::vector<int>{2, 3, 4} : o.ts;
  std::sort(ts.begin(), ts.end());
  json rows = json::array();
  double prev_excess = -1e300;
  for (int t : ts) {
    AppendixAConfig cfg{d, t, o.seed};
    AppendixA a = build_appendix_a(cfg);
    const Graph& g = a.graph;
    const int n = cfg.n();
    ++r.checked;
    if (g.regular_degree() != d) r.violation("t=" + std::to_string(t) + ": not d-regular");
    if (a.edge_connectivity < d - 1)
      r.violation("t=" + std::to_string(t) + ": edge connectivity " +
                  std::to_string(a.edge_connectivity));
    int sets = 0, sets_ok = 0;
    for (const auto& s : appendix_a_interval_sets(a)) {
      ++sets;
      ++r.checked;
      MaximalSetCheck m = appendix_a_maximal_sets(a, s);
      if (m.ok())
        ++sets_ok;
      else
        r.violation("t=" + std::to_string(t) + ": M(S) with c=" + std::to_string(m.c) +
                    (m.independent ? "" : " not independent") +
                    (m.maximal ? "" : " not maximal") + (m.size_ok ? "" : " too small"));
    }
    const BigCount i = count_independent_sets(g);
    ++r.checked;
    if (i < pow2(static_cast<unsigned>(n + 1)))
      r.violation("t=" + std::to_string(t) + ": i = " + str(i) + " < 2^(n+1)");
    const double excess = log2_of(i) - n;
    ++r.checked;
    if (excess <= prev_excess)
      r.violation("t=" + std::to_string(t) + ": log2 i - n did not grow");
    prev_excess = excess;
    const DisjointnessReport dj = appendix_a_classes_disjoint(a);
    rows.push_back({{"t", t}, {"vertices", g.vertex_count()}, {"n", n},
                    {"bipartite", g.is_bipartite()},
                    {"edge_connectivity", a.edge_connectivity},
                    {"vertex_connectivity", a.vertex_connectivity},
                    {"interval_sets", sets}, {"maximal_sets_ok", sets_ok}, {"i", str(i)},
                    {"log2_i_minus_n", excess},
                    {"classes_disjoint", dj.disjoint}, {"class_pairs", dj.pairs}});
  }
  r.details = {{"d", d}, {"gadget_seed", o.seed}, {"rows", rows}};
  return r;
}

SuiteResult suite_appendix_b(const SuiteOptions& o) {
  SuiteResult r;
  const int d = pick(o.d, 3);
  const int max_n = pick(o.max_side, 12);
  json rows = json::array();
  for (int n = d + 1; n <= max_n; ++n) {
    AppendixBReport rep = appendix_b_structure_check({n, d});
    ++r.checked;
    const std::string tag = "n=" + std::to_string(n);
    if (!rep.intervals) r.violation(tag + ": a closed record is not an interval");
    if (!rep.progressions) r.violation(tag + ": a neighbourhood is not a progression");
    if (!rep.excess_is_d) r.violation(tag + ": some record has g != a + d");
    if (!rep.table_zero_elsewhere) r.violation(tag + ": nonzero table entry off g - a = d");
    json ratios = json::array();
    for (const auto& [key, v] : rep.ratio)
      ratios.push_back({{"a", key.first}, {"g", key.second}, {"ratio", v}});
    rows.push_back({{"n", n}, {"records", rep.records},
                    {"min_full_neighbourhood_fraction", rep.min_full_fraction},
                    {"ratios", ratios}});
  }
  // i > 2^{n+1} in the sparse regime, at the largest exhaustive size.
  const CayleyGraph big = build_appendix_b({max_n, d});
  const BigCount i = count_independent_sets(big.graph());
  ++r.checked;
  if (i <= pow2(static_cast<unsigned>(max_n + 1)))
    r.violation("n=" + std::to_string(max_n) + ": i = " + str(i) + " <= 2^(n+1)");
  r.details = {{"d", d}, {"rows", rows},
               {"largest", {{"n", max_n}, {"i", str(i)},
                            {"ratio_to_2^(n+1)", std::exp2(log2_of(i) - (max_n + 1))}}}};
  return r;
}

using SuiteFn = std::function<SuiteResult(const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"engine", suite_engine},
      {"lucas", suite_lucas},
      {"kdd", suite_kdd},
      {"zhao", suite_zhao},
      {"eqsumm", suite_eqsumm},
      {"cluster", suite_cluster},
      {"olson", suite_olson},
      {"prp", suite_prp},
      {"pruse2", suite_pruse2},
      {"fact41", suite_fact41},
      {"psi", [](const SuiteOptions& o) { return suite_psi(o, false); }},
      {"lemma43", [](const SuiteOptions& o) { return suite_psi(o, true); }},
      {"phi", suite_phi},
      {"cover", suite_cover},
      {"thinning", suite_thinning},
      {"appendix-a", suite_appendix_a},
      {"appendix-b", suite_appendix_b},
      {"trend", suite_trend},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  for (const auto& [key, fn] : registry())
    if (key == name) {
      SuiteResult r = fn(opts);
      r.name = name;
      return r;
    }
  throw Error(ErrorKind::InvalidInput, "unknown suite '" + name + "'");
}

}  // namespace cayley
