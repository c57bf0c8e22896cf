#include <doctest.h>

#include "cayley/constructions.hpp"
#include "cayley/corpus.hpp"
#include "cayley/count.hpp"
#include "cayley/errors.hpp"
#include "cayley/io.hpp"
#include "cayley/suites.hpp"

using namespace cayley;

TEST_CASE("Cayley graph JSON round trip") {
  GroupSpec g = make_group({2, 8});
  CayleyGraph cg = build_cayley(g, make_generators(g, std::vector<int>{1, 7, 8}));
  json doc = graph_to_json(cg);
  CHECK(doc["group"]["factors"] == json::array({2, 8}));
  CHECK(doc["generators"][0] == json::array({0, 1}));
  LoadedGraph back = graph_from_json(doc);
  REQUIRE(back.cayley);
  CHECK(back.graph.edges() == cg.graph().edges());
  CHECK(back.cayley->generators().elements() == cg.generators().elements());
}

TEST_CASE("residue generators are accepted") {
  json doc = json::parse(R"({"group":{"factors":[16]},"generators":[1,3,13,15]})");
  LoadedGraph g = graph_from_json(doc);
  CHECK(count_independent_sets(g.graph) == count_independent_sets(build_appendix_b({8, 3}).graph()));
}

TEST_CASE("explicit graph JSON round trip") {
  AppendixA a = build_appendix_a({3, 2, 1});
  json doc = graph_to_json(a.graph, json{{"construction", "appendix-a"}});
  LoadedGraph back = graph_from_json(doc);
  CHECK_FALSE(back.cayley);
  CHECK(back.graph.edges() == a.graph.edges());
  CHECK(back.graph.is_bipartite());
  CHECK(back.provenance["construction"] == "appendix-a");
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"group":{}})")), Error);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"group":{"factors":[8]},"generators":[1]})")),
                  Error);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertex_count":3,"edges":[[0,5]]})")), Error);
}

TEST_CASE("edge list and table CSV") {
  const Graph c4 = cycle_graph(4).graph();
  CHECK(edge_list(c4) == "4 4\n0 1\n0 3\n1 2\n2 3\n");
  CHECK(table_csv(container_table(cycle_graph(8).graph())) == "a,g,t,count\n1,2,1,4\n2,3,1,4\n");
  CHECK(table_csv(container_table(c4)) == "a,g,t,count\n");
}

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  for (const char* s : {"olson", "prp", "pruse2", "fact41", "zhao", "eqsumm", "cluster", "phi",
                        "psi", "lemma43", "thinning", "appendix-a", "appendix-b"})
    CHECK(std::find(names.begin(), names.end(), s) != names.end());
  CHECK_THROWS_AS(run_suite("nope"), Error);

  SuiteOptions o;
  o.max_order = 6;
  SuiteResult r = run_suite("olson", o);
  CHECK(r.passed);
  CHECK(r.checked > 0);
  CHECK(r.to_json()["suite"] == "olson");

  SuiteOptions same;
  same.samples = 200;
  same.seed = 9;
  CHECK(run_suite("fact41", same).to_json() == run_suite("fact41", same).to_json());
}
