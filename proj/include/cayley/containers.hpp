#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cayley/graph.hpp"

namespace cayley {

/// phi = d - sqrt(d)/log2 d and psi = d/log2 d for a d-regular graph.
struct ApproxParams {
  int d = 0;
  double phi = 0;
  double psi = 0;
  bool phi_degenerate = false;  // phi <= 0 or d < 4
  bool psi_degenerate = false;  // psi >= d

  static ApproxParams for_degree(int d);
};

struct CoverResult {
  VertexSet cover;  // B'
  int a = 0;        // min degree from the A side into B
  int b = 0;        // max degree from B into the A side
  double bound = 0; // (|B|/a)(1 + ln b)
};
/// Greedy max-coverage cover of `targets` by vertices of `pool`.
/// InvalidInput when some target has no neighbour in the pool;
/// TheoremViolation if the greedy size ever exceeds the bound.
CoverResult greedy_cover(const Graph& g, const VertexSet& targets,
                         const VertexSet& pool);

struct SuperVertex {
  VertexSet members;     // S, original X-vertices
  VertexSet contracted;  // Y-vertices merged into v_S (outside C)
  VertexSet nbhd;        // N(v_S) = N(S) \ N(S)_d, all inside C
};

struct ContractionState {
  VertexSet c;                    // surviving Y-vertices
  VertexSet r;                    // X-vertices never contracted
  std::vector<SuperVertex> b;     // ordered by smallest member
  int steps = 0;                  // one per vertex of Y \ C
};
/// Contracts each u in Y \ C (ascending id) with its current neighbourhood.
/// `side` names the X side of the contraction.
ContractionState contract(const Graph& g, const VertexSet& c, Side side = Side::X);

struct PhiConfig {
  std::uint64_t seed = 1;
  int max_retries = 100;
  int d2 = 0;  // |2D|; 0 means max_v |N^2(v)|
  // Property thresholds are k * t / log2(d)^e (first two) or k * t / d^e.
  double q0_factor = 50;
  double grad_factor = 50;
  double uncovered_factor = 5;
  double missed_factor = 5;
};

struct PhiReport {
  VertexSet f;
  bool valid = false;
  bool fallback = false;       // F = G returned
  bool degenerate_p = false;   // p clamped to 1
  bool degenerate_phi = false;
  double p = 0;
  int draws = 0;
  bool accepted = false;       // all four properties held on the last draw
  std::array<double, 4> measured{};
  std::array<double, 4> threshold{};
  std::array<bool, 4> holds{};
  int z1 = 0;
  int z2 = 0;
};

/// Per-record seed derived from a master seed and record id.
std::uint64_t record_seed(std::uint64_t master, std::uint64_t record);

/// Samples Q0 from C n G, builds Z1 u Z2 and checks the phi clauses.
/// Requires rec.boundary inside C. In the nondegenerate regime draws are
/// rejected until the four size properties hold; SearchExhausted after
/// max_retries.
PhiReport phi_approx_sample(const Graph& g, const ClosedSetRecord& rec,
                            const VertexSet& c, const PhiConfig& cfg = {});

/// F inside G, F contains G_phi, N(F) contains [A].
bool check_phi(const Graph& g, const ClosedSetRecord& rec, const VertexSet& f,
               double phi);

struct PsiApprox {
  VertexSet s;
  VertexSet f;
  int loop1 = 0;
  int loop2 = 0;
  int repairs = 0;  // w inside G moved into F instead of shrinking S
};
PsiApprox psi_approx(const Graph& g, const ClosedSetRecord& rec,
                     const VertexSet& f, double psi);

struct PsiCheck {
  bool covers = false;    // S contains [A]
  bool inside = false;    // F inside G
  bool clause1 = false;   // d_F(u) >= d - psi on S
  bool clause2 = false;   // d_{X\S}(v) >= d - psi off F
  bool valid = false;
  bool lemma_applicable = false;  // psi < d
  bool lemma = true;              // |S| <= |F| + 2 t psi / (d - psi)
  double lhs = 0;
  double rhs = 0;
};
PsiCheck check_psi(const Graph& g, const ClosedSetRecord& rec,
                   const PsiApprox& approx, double psi);

struct BoundaryReport {
  VertexSet c;
  bool fallback = false;
  int trimmed = 0;    // |[A] \ A_|
  int z2 = 0;
  int z3 = 0;
  int residual = 0;   // boundary vertices added directly
  double target = 0;  // t d2 / log2(d)^3
  double ratio = 0;
};
BoundaryReport boundary_container(const Graph& g, const ClosedSetRecord& rec,
                                  int d2 = 0);

/// max_v |N^2(v)|; equals |2D| on a Cayley graph.
int second_degree(const Graph& g);

}  // namespace cayley
