// cayley: batch harness over the library. Exit codes: 0 pass, 1 theorem
// violation, 2 budget exhausted / infeasible, 3 usage or input error.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "cayley/constructions.hpp"
#include "cayley/containers.hpp"
#include "cayley/corpus.hpp"
#include "cayley/count.hpp"
#include "cayley/errors.hpp"
#include "cayley/io.hpp"
#include "cayley/suites.hpp"

#ifndef CAYLEY_VERSION
#define CAYLEY_VERSION "0.0.0"
#endif

using namespace cayley;

namespace {

enum Exit { kPass = 0, kViolation = 1, kBudget = 2, kUsage = 3 };

struct Common {
  std::uint64_t seed = 1;
  int threads = 1;
  bool no_timing = false;
  std::string format;
  std::string output;
  std::int64_t max_records = CountBudget{}.max_records;
  int brute_force_vertices = CountBudget{}.brute_force_vertices;
  int branching_vertices = CountBudget{}.branching_vertices;

  CountBudget budget() const {
    CountBudget b;
    b.max_records = max_records;
    b.brute_force_vertices = brute_force_vertices;
    b.branching_vertices = branching_vertices;
    return b;
  }
};

std::uint64_t env_seed() {
  if (const char* s = std::getenv("CAYLEY_SEED")) {
    try {
      return std::stoull(s);
    } catch (...) {
      throw Error(ErrorKind::InvalidInput, std::string("CAYLEY_SEED is not an integer: ") + s);
    }
  }
  return 1;
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty() || c.output == "-")
    std::cout << text;
  else
    write_file(c.output, text);
}

json header(const Common& c, const std::string& command, json config) {
  config["seed"] = c.seed;
  config["threads"] = c.threads;
  config["budget"] = {{"brute_force_vertices", c.brute_force_vertices},
                      {"branching_vertices", c.branching_vertices},
                      {"max_records", c.max_records}};
  return json{{"tool", "cayley"}, {"version", CAYLEY_VERSION}, {"command", command},
              {"config", std::move(config)}, {"seed", c.seed}};
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void stamp(json& report, const Common& c, const Stopwatch& w) {
  if (!c.no_timing) report["elapsed_s"] = w.seconds();
}

/// "1,3,13,15" (residues, cyclic groups) or "(1,0),(0,1)" / "1:0,0:1" (tuples).
std::vector<Element> parse_generators(const GroupSpec& group, const std::string& text) {
  std::vector<Element> out;
  const bool tuples = text.find('(') != std::string::npos || text.find(':') != std::string::npos;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::InvalidSpec, "generators: " + why + " at position " +
                                            std::to_string(pos) + " in '" + text + "'");
  };
  auto number = [&]() {
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && text[start] == '-')) {
      pos = start;
      fail("expected an integer");
    }
    return std::stoll(text.substr(start, pos - start));
  };
  auto skip = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto reduce = [&](long long v, int m) { return static_cast<int>(((v % m) + m) % m); };

  while (true) {
    skip();
    if (pos >= text.size()) fail("expected a generator");
    Element e;
    if (tuples) {
      const bool paren = text[pos] == '(';
      if (paren) ++pos;
      while (true) {
        skip();
        const std::size_t at = pos;
        long long v = number();
        const int k = static_cast<int>(e.coords.size());
        if (k >= group.rank()) {
          pos = at;
          fail("too many coordinates for " + group.to_string());
        }
        e.coords.push_back(reduce(v, group.factors()[k]));
        skip();
        if (pos < text.size() && (text[pos] == ':' || (paren && text[pos] == ','))) {
          ++pos;
          continue;
        }
        break;
      }
      if (paren) {
        if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
        ++pos;
      }
      if (static_cast<int>(e.coords.size()) != group.rank()) fail("wrong number of coordinates");
    } else {
      if (group.rank() != 1)
        fail("residue generators need a cyclic group; use tuples like (1,0)");
      e.coords.push_back(reduce(number(), group.factors()[0]));
    }
    out.push_back(std::move(e));
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != ',') fail("expected ','");
    ++pos;
  }
  return out;
}

LoadedGraph load(const std::string& path) {
  const std::string text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
  return graph_from_json(doc);
}

int side_n(const Graph& g) { return g.vertex_count() / 2; }

// ---------------------------------------------------------------- build

struct BuildArgs {
  std::string group, gens;
  bool symmetrize = false;
  int d = 3, t = 2, n = 8;
};

int cmd_build(const Common& c, const BuildArgs& a, const std::string& construction) {
  json doc;
  json config;
  if (construction.empty()) {
    if (a.group.empty() || a.gens.empty())
      throw Error(ErrorKind::InvalidSpec, "build needs --group and --gens, or a construction name");
    GroupSpec group = parse_group(a.group);
    GeneratorSet gens = make_generators(group, parse_generators(group, a.gens), a.symmetrize);
    if (!is_generating(group, VertexSet::from_range(group.order(), gens.ids())))
      std::cerr << "warning: generators do not generate " << group.to_string()
                << "; the graph is disconnected\n";
    CayleyGraph cg = build_cayley(group, gens);
    config = {{"group", a.group}, {"gens", a.gens}, {"symmetrize", a.symmetrize}};
    doc = graph_to_json(cg, header(c, "build", config));
  } else if (construction == "appendix-a") {
    AppendixAConfig cfg{a.d, a.t, c.seed};
    AppendixA built = build_appendix_a(cfg);
    config = {{"construction", construction}, {"d", a.d}, {"t", a.t}};
    json prov = header(c, "build", config);
    prov["vertex_count"] = built.graph.vertex_count();
    prov["edge_connectivity"] = built.edge_connectivity;
    prov["vertex_connectivity"] = built.vertex_connectivity;
    doc = graph_to_json(built.graph, prov);
  } else if (construction == "appendix-b") {
    CayleyGraph cg = build_appendix_b({a.n, a.d});
    config = {{"construction", construction}, {"n", a.n}, {"d", a.d}};
    doc = graph_to_json(cg, header(c, "build", config));
  } else {
    throw Error(ErrorKind::InvalidSpec, "unknown construction '" + construction +
                                            "' (expected appendix-a or appendix-b)");
  }
  if (c.format == "edges") {
    emit(c, edge_list(graph_from_json(doc).graph));
  } else {
    emit(c, doc.dump(2) + "\n");
  }
  return kPass;
}

// ---------------------------------------------------------------- count

int cmd_count(const Common& c, const std::string& path) {
  Stopwatch w;
  LoadedGraph lg = load(path);
  const Graph& g = lg.graph;
  const CountBudget budget = c.budget();
  const BigCount i = count_independent_sets(g, budget);
  json report = header(c, "count", {{"graph", path}});
  report["vertex_count"] = g.vertex_count();
  report["edge_count"] = g.edge_count();
  report["bipartite"] = g.is_bipartite();
  report["i"] = to_decimal(i);
  report["engine"] = "branching";
  report["log2_i"] = log2_of(i);
  if (g.vertex_count() % 2 == 0)
    report["log2_i_minus_n_plus_1"] = log2_of(i) - (side_n(g) + 1);
  int code = kPass;
  if (g.vertex_count() <= budget.brute_force_vertices) {
    const BigCount b = count_independent_sets_bruteforce(g, budget);
    report["brute_force"] = to_decimal(b);
    report["cross_check"] = b == i;
    if (b != i) code = kViolation;
  } else {
    report["cross_check"] = nullptr;
  }
  stamp(report, c, w);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "vertices,edges,i,log2_i\n"
       << g.vertex_count() << ',' << g.edge_count() << ',' << to_decimal(i) << ','
       << log2_of(i) << '\n';
    emit(c, os.str());
  } else {
    emit(c, report.dump(2) + "\n");
  }
  return code;
}

// ---------------------------------------------------------------- table

int cmd_table(const Common& c, const std::string& path, bool closed_only) {
  Stopwatch w;
  LoadedGraph lg = load(path);
  const ContainerTable t = container_table(lg.graph, closed_only, c.budget());
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& [key, count] : t.entries)
      rows.push_back({{"a", key.first}, {"g", key.second}, {"t", key.second - key.first},
                      {"count", to_decimal(count)}});
    json report = header(c, "table", {{"graph", path}, {"closed_only", closed_only}});
    report["n"] = t.n;
    report["rows"] = rows;
    stamp(report, c, w);
    emit(c, report.dump(2) + "\n");
  } else {
    emit(c, table_csv(t));
  }
  return kPass;
}

// ---------------------------------------------------------------- containers

int cmd_containers(const Common& c, const std::string& path, int retries) {
  Stopwatch w;
  LoadedGraph lg = load(path);
  const Graph& g = lg.graph;
  if (!g.is_bipartite()) throw Error(ErrorKind::InvalidInput, "containers need a bipartite graph");
  const int d = g.regular_degree();
  if (d <= 0) throw Error(ErrorKind::InvalidInput, "containers need a regular graph");
  const ApproxParams params = ApproxParams::for_degree(d);
  const int d2 = lg.cayley ? lg.cayley->generators().doubling() : second_degree(g);
  const auto records = enumerate_small_2linked_closed(g, Side::X, c.budget());

  std::ostringstream csv;
  csv << "record,a,g,t,F,S,phi_valid,psi_valid,lemma43,C,retries\n";
  json rows = json::array();
  int violations = 0, exhausted = 0;
  for (std::size_t k = 0; k < records.size(); ++k) {
    const ClosedSetRecord& rec = records[k];
    const BoundaryReport bc = boundary_container(g, rec, d2);
    PhiConfig cfg;
    cfg.seed = record_seed(c.seed, k);
    cfg.max_retries = retries;
    cfg.d2 = d2;
    PhiReport phi;
    try {
      phi = phi_approx_sample(g, rec, bc.c, cfg);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SearchExhausted) throw;
      ++exhausted;
      csv << k << ',' << rec.a << ',' << rec.g << ',' << rec.t << ",,,false,false,,"
          << bc.c.count() << ',' << retries << '\n';
      continue;
    }
    const bool phi_ok = check_phi(g, rec, phi.f, params.phi);
    const PsiApprox psi = psi_approx(g, rec, phi.f, params.psi);
    const PsiCheck pc = check_psi(g, rec, psi, params.psi);
    violations += !phi_ok + !pc.valid + !pc.lemma;
    const std::string lemma = pc.lemma_applicable ? (pc.lemma ? "true" : "false") : "skipped";
    csv << k << ',' << rec.a << ',' << rec.g << ',' << rec.t << ',' << phi.f.count() << ','
        << psi.s.count() << ',' << (phi_ok ? "true" : "false") << ','
        << (pc.valid ? "true" : "false") << ',' << lemma << ',' << bc.c.count() << ','
        << phi.draws << '\n';
    rows.push_back({{"record", k}, {"a", rec.a}, {"g", rec.g}, {"t", rec.t},
                    {"F", phi.f.count()}, {"S", psi.s.count()}, {"phi_valid", phi_ok},
                    {"psi_valid", pc.valid}, {"lemma43", lemma}, {"C", bc.c.count()},
                    {"retries", phi.draws}, {"degenerate_p", phi.degenerate_p},
                    {"fallback", phi.fallback}});
  }
  if (c.format == "json") {
    json report = header(c, "containers", {{"graph", path}, {"retries", retries}});
    report["degree"] = d;
    report["phi"] = params.phi;
    report["psi"] = params.psi;
    report["d2"] = d2;
    report["records"] = rows;
    report["violations"] = violations;
    report["retries_exhausted"] = exhausted;
    stamp(report, c, w);
    emit(c, report.dump(2) + "\n");
  } else {
    emit(c, csv.str());
  }
  if (violations) return kViolation;
  return exhausted ? kBudget : kPass;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  std::string construction;
  int n = 0;
  SuiteOptions opts;
  std::string ts;
};

int cmd_verify(const Common& c, VerifyArgs v) {
  Stopwatch w;
  v.opts.seed = c.seed;
  if (!v.construction.empty()) {
    if (v.construction != "appendix-b" && v.construction != "appendix-a")
      throw Error(ErrorKind::InvalidSpec, "unknown construction '" + v.construction + "'");
    if (v.construction == "appendix-b" && v.n > 0)
      v.opts.instances = {{v.n, v.opts.d > 0 ? v.opts.d : 3}};
  }
  if (!v.ts.empty()) {
    std::stringstream ss(v.ts);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.opts.ts.push_back(std::stoi(tok));
  }
  const SuiteResult r = run_suite(v.suite, v.opts);
  json config = {{"suite", v.suite}};
  if (!v.construction.empty()) config["construction"] = v.construction;
  if (v.n) config["n"] = v.n;
  const SuiteOptions& o = v.opts;
  for (auto [key, val] : {std::pair{"max_order", o.max_order}, {"max_vertices", o.max_vertices},
                          {"max_side", o.max_side}, {"max_size", o.max_size},
                          {"max_m", o.max_m}, {"max_d", o.max_d}, {"j", o.j},
                          {"samples", o.samples}, {"seeds", o.seeds},
                          {"retries", o.retries}, {"d", o.d}})
    if (val > 0) config[key] = val;
  if (o.max_k >= 0) config["max_k"] = o.max_k;
  if (o.c > 0) config["c"] = o.c;
  if (o.alpha > 0) config["alpha"] = o.alpha;
  if (!o.ts.empty()) config["ts"] = o.ts;
  json report = header(c, "verify", config);
  report["result"] = r.to_json();
  stamp(report, c, w);
  emit(c, report.dump(2) + "\n");
  std::cerr << v.suite << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.checked
            << " checks, " << r.violations << " violations)\n";
  return r.passed ? kPass : kViolation;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TheoremViolation: return kViolation;
    case ErrorKind::InstanceTooLarge:
    case ErrorKind::SearchExhausted: return kBudget;
    default: return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independent sets in Abelian Cayley graphs: counting, sumsets, containers"};
  app.set_version_flag("--version", CAYLEY_VERSION);
  app.require_subcommand(1);

  Common common;
  std::optional<std::uint64_t> seed_flag;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed_flag, "Master seed (default: $CAYLEY_SEED or 1)");
    sub->add_option("--threads", common.threads, "Worker cap")->check(CLI::PositiveNumber);
    sub->add_flag("--no-timing", common.no_timing, "Omit wall time for reproducible reports");
    sub->add_option("--output,-o", common.output, "Output path (default: stdout)");
    sub->add_option("--max-records", common.max_records, "Closed-set enumeration cap");
    sub->add_option("--brute-force-cap", common.brute_force_vertices,
                    "Largest graph cross-checked by brute force");
    sub->add_option("--branching-cap", common.branching_vertices,
                    "Largest component handled by the branching engine");
  };

  BuildArgs build;
  std::string construction;
  auto* b = app.add_subcommand("build", "Write a graph file");
  add_common(b);
  b->add_option("construction", construction, "appendix-a | appendix-b");
  b->add_option("--group", build.group, "Group, e.g. Z16 or Z2xZ8");
  b->add_option("--gens", build.gens, "Generators: residues 1,3 or tuples (1,0),(0,1)");
  b->add_flag("--symmetrize", build.symmetrize, "Close the generator list under negation");
  b->add_option("--d", build.d, "Degree parameter");
  b->add_option("--t", build.t, "Number of blocks (appendix-a)");
  b->add_option("--n", build.n, "Side size, group Z_{2n} (appendix-b)");
  b->add_option("--format", common.format, "json | edges")
      ->check(CLI::IsMember({"json", "edges"}));

  std::string path;
  auto* cnt = app.add_subcommand("count", "Count independent sets");
  add_common(cnt);
  cnt->add_option("graph", path, "Graph JSON file")->required();
  cnt->add_option("--format", common.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  bool closed_only = false;
  auto* tab = app.add_subcommand("table", "Small 2-linked set counts G(a,g) as CSV");
  add_common(tab);
  tab->add_option("graph", path, "Graph JSON file")->required();
  tab->add_flag("--closed-only", closed_only, "Count only closed sets");
  tab->add_option("--format", common.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  int retries = 100;
  auto* con = app.add_subcommand("containers", "Per-record container certificates");
  add_common(con);
  con->add_option("graph", path, "Graph JSON file")->required();
  con->add_option("--retries", retries, "Rejection-sampling cap")->check(CLI::PositiveNumber);
  con->add_option("--format", common.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs verify;
  auto* ver = app.add_subcommand("verify", "Run a verification sweep");
  add_common(ver);
  ver->add_option("suite", verify.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  SuiteOptions& o = verify.opts;
  ver->add_option("--construction", verify.construction, "appendix-a | appendix-b");
  ver->add_option("--n", verify.n, "Instance side size (with --construction appendix-b)");
  ver->add_option("--d", o.d, "Degree parameter");
  ver->add_option("--t", verify.ts, "Block counts for appendix-a, e.g. 2,3,4");
  ver->add_option("--max-order", o.max_order);
  ver->add_option("--max-vertices", o.max_vertices);
  ver->add_option("--max-side", o.max_side);
  ver->add_option("--max-size", o.max_size);
  ver->add_option("--max-m", o.max_m);
  ver->add_option("--max-d", o.max_d);
  ver->add_option("--max-k", o.max_k);
  ver->add_option("--j", o.j);
  ver->add_option("--c", o.c);
  ver->add_option("--samples", o.samples);
  ver->add_option("--seeds", o.seeds);
  ver->add_option("--retries", o.retries);
  ver->add_option("--alpha", o.alpha);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    common.seed = seed_flag ? *seed_flag : env_seed();
    if (common.format.empty()) common.format = tab->parsed() || con->parsed() ? "csv" : "json";
    if (b->parsed()) return cmd_build(common, build, construction);
    if (cnt->parsed()) return cmd_count(common, path);
    if (tab->parsed()) return cmd_table(common, path, closed_only);
    if (con->parsed()) return cmd_containers(common, path, retries);
    if (ver->parsed()) return cmd_verify(common, verify);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
