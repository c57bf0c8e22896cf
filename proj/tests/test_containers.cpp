#include <doctest.h>

#include <cmath>
#include <random>

#include "cayley/constructions.hpp"
#include "cayley/containers.hpp"
#include "cayley/corpus.hpp"
#include "cayley/count.hpp"
#include "cayley/errors.hpp"
#include "helpers.hpp"

using namespace cayley;

TEST_CASE("approx parameters") {
  ApproxParams c8 = ApproxParams::for_degree(2);
  CHECK(c8.psi == doctest::Approx(2));
  CHECK(c8.phi_degenerate);
  CHECK(c8.psi_degenerate);
  ApproxParams d7 = ApproxParams::for_degree(8);
  CHECK(d7.phi == doctest::Approx(8 - std::sqrt(8.0) / 3));
  CHECK(d7.psi == doctest::Approx(8.0 / 3));
  CHECK_FALSE(d7.psi_degenerate);
}

TEST_CASE("greedy_cover") {
  // Star: targets 0..3, centre 4.
  Graph star(5);
  for (int v = 0; v < 4; ++v) star.add_edge(v, 4);
  CoverResult s = greedy_cover(star, vs(5, {0, 1, 2, 3}), vs(5, {4}));
  CHECK(s.cover == vs(5, {4}));
  CHECK(s.bound == doctest::Approx(1 + std::log(4.0)));

  Graph match(8);
  for (int v = 0; v < 4; ++v) match.add_edge(v, v + 4);
  CoverResult m = greedy_cover(match, vs(8, {0, 1, 2, 3}), vs(8, {4, 5, 6, 7}));
  CHECK(m.cover.count() == 4);
  CHECK(m.bound == doctest::Approx(4));

  Graph lonely(3);
  lonely.add_edge(0, 2);
  CHECK_THROWS_AS(greedy_cover(lonely, vs(3, {0, 1}), vs(3, {2})), Error);
}

TEST_CASE("contract") {
  const Graph c8 = cycle_graph(8).graph();
  const VertexSet y = c8.parts()->y;
  ContractionState all = contract(c8, y);
  CHECK(all.steps == 0);
  CHECK(all.r == c8.parts()->x);
  CHECK(all.b.empty());

  VertexSet c = y;
  c.erase(1);
  ContractionState one = contract(c8, c);
  CHECK(one.steps == 1);
  REQUIRE(one.b.size() == 1);
  CHECK(one.b[0].members == vs(8, {0, 2}));
  CHECK(one.b[0].nbhd == vs(8, {3, 7}));
  CHECK(one.r == vs(8, {4, 6}));
}

TEST_CASE("contract partitions X") {
  const Graph g = build_appendix_b({16, 5}).graph();
  const VertexSet x = g.parts()->x, y = g.parts()->y;
  std::mt19937_64 rng(9);
  for (int k = 0; k < 50; ++k) {
    VertexSet c(g.vertex_count());
    y.for_each([&](int v) {
      if (rng() % 3) c.insert(v);
    });
    ContractionState s = contract(g, c);
    CHECK(s.steps == (y - c).count());
    VertexSet seen = s.r;
    int total = s.r.count();
    for (const auto& sv : s.b) {
      CHECK_FALSE(seen.intersects(sv.members));
      seen |= sv.members;
      total += sv.members.count();
      CHECK(sv.nbhd.is_subset_of(c));
    }
    CHECK(seen == x);
    CHECK(total == x.count());
  }
}

TEST_CASE("check_phi and check_psi basics") {
  const Graph c8 = cycle_graph(8).graph();
  ClosedSetRecord r = closure(c8, vs(8, {0, 2}));
  const double phi = ApproxParams::for_degree(2).phi;
  CHECK(check_phi(c8, r, r.nbhd, phi));
  CHECK_FALSE(check_phi(c8, r, VertexSet(8), phi));

  PsiApprox p = psi_approx(c8, r, r.nbhd, 2);
  CHECK(p.s == c8.parts()->x);
  CHECK(p.f == r.nbhd);
  CHECK(p.loop1 == 0);
  PsiCheck pc = check_psi(c8, r, p, 2);
  CHECK(pc.valid);
  CHECK_FALSE(pc.lemma_applicable);

  PsiApprox empty{VertexSet(8), r.nbhd};
  CHECK_FALSE(check_psi(c8, r, empty, 2).valid);
}

TEST_CASE("phi sampling on the degenerate C8 record") {
  const Graph c8 = cycle_graph(8).graph();
  ClosedSetRecord r = closure(c8, vs(8, {0, 2}));
  PhiReport rep = phi_approx_sample(c8, r, r.boundary);
  CHECK(rep.valid);
  CHECK(rep.f == r.nbhd);
  CHECK(check_phi(c8, r, rep.f, ApproxParams::for_degree(2).phi));
}

TEST_CASE("boundary_container") {
  const Graph c8 = cycle_graph(8).graph();
  ClosedSetRecord r = closure(c8, vs(8, {0, 2}));
  BoundaryReport b = boundary_container(c8, r);
  CHECK(r.boundary == vs(8, {3, 7}));
  CHECK(r.boundary.is_subset_of(b.c));
  CHECK(b.fallback);
}

TEST_CASE("Appendix B n=16 d=5: full pipeline per record") {
  CayleyGraph cg = build_appendix_b({16, 5});
  const Graph& g = cg.graph();
  const ApproxParams params = ApproxParams::for_degree(cg.degree());
  const auto recs = enumerate_small_2linked_closed(g, Side::X);
  CHECK(recs.size() == 128);
  for (std::size_t k = 0; k < recs.size(); ++k) {
    const auto& rec = recs[k];
    BoundaryReport bc = boundary_container(g, rec, cg.generators().doubling());
    CHECK(rec.boundary.is_subset_of(bc.c));
    PhiConfig cfg;
    cfg.seed = record_seed(7, k);
    cfg.d2 = cg.generators().doubling();
    PhiReport phi = phi_approx_sample(g, rec, bc.c, cfg);
    CHECK(check_phi(g, rec, phi.f, params.phi));
    PhiReport again = phi_approx_sample(g, rec, bc.c, cfg);
    CHECK(again.f == phi.f);
    PhiReport wide = phi_approx_sample(g, rec, g.parts()->y, cfg);
    CHECK(check_phi(g, rec, wide.f, params.phi));
    PsiApprox psi = psi_approx(g, rec, phi.f, params.psi);
    PsiCheck pc = check_psi(g, rec, psi, params.psi);
    CHECK(pc.valid);
    CHECK(pc.lemma);
  }
  CHECK(second_degree(g) == cg.generators().doubling());
}

TEST_CASE("record seeds are distinct") {
  CHECK(record_seed(1, 0) != record_seed(1, 1));
  CHECK(record_seed(1, 0) != record_seed(2, 0));
  CHECK(record_seed(5, 3) == record_seed(5, 3));
}
