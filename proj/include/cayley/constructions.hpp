#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cayley/bigcount.hpp"
#include "cayley/graph.hpp"

namespace cayley {

/// Bipartite (X, Y u Z) gadget: |X| = 2d - 2, |Y| = |Z| = d, X-degrees d,
/// Y/Z-degrees d - 1, vertex connectivity >= d - 1.
/// Local ids: X = [0, 2d-2), Y = [2d-2, 3d-2), Z = [3d-2, 4d-2).
struct Gadget {
  int d = 0;
  Graph graph;
  int attempts = 0;
  int connectivity = 0;
};
Gadget build_gadget(int d, std::uint64_t seed, int max_attempts = 10000);

struct AppendixAConfig {
  int d = 3;
  int t = 2;
  std::uint64_t gadget_seed = 1;

  int block_size() const { return 4 * d - 2; }
  int vertex_count() const { return block_size() * t; }
  int n() const { return vertex_count() / 2; }
};

struct AppendixA {
  AppendixAConfig cfg;
  Graph graph;
  std::vector<Gadget> gadgets;  // one per block
  int edge_connectivity = 0;
  int vertex_connectivity = 0;

  /// Global ids of block i (1-based) pieces.
  VertexSet x_block(int i) const;
  VertexSet y_block(int i) const;
  VertexSet z_block(int i) const;
  VertexSet left(int i) const;   // L_i
  VertexSet right(int i) const;  // R_i
};
/// Blocks 1..t of 4d-2 vertices each; Z_i is matched to Y_{i+1 mod t} by
/// the identity on local labels. InvalidSpec for d < 3 or t < 2.
AppendixA build_appendix_a(const AppendixAConfig& cfg, bool measure_vertex_connectivity = true);

using BlockInterval = std::pair<int, int>;  // [first, last], 1-based

struct MaximalSetCheck {
  VertexSet m;
  int c = 0;
  bool independent = false;
  bool maximal = false;
  bool size_ok = false;  // |M(S)| >= n - 2c
  bool ok() const { return independent && maximal && size_ok; }
};
/// Throws InvalidInput on malformed interval sets: endpoints must be odd,
/// in range, pairwise distinct, intervals disjoint; for odd t the set must
/// touch block 1 or block t (the seam Z_t - Y_1 joins R_t to R_1).
MaximalSetCheck appendix_a_maximal_sets(const AppendixA& g,
                                        const std::vector<BlockInterval>& s);
/// Every valid interval set for the configuration, in lexicographic order.
std::vector<std::vector<BlockInterval>> appendix_a_interval_sets(const AppendixA& g);
struct DisjointnessReport {
  bool disjoint = true;
  int pairs = 0;
  int first = -1;   // indices into appendix_a_interval_sets when not disjoint
  int second = -1;
  VertexSet witness;  // independent set lying in both classes
};
/// Decides whether I(S1) and I(S2) are disjoint for every pair of distinct
/// valid interval sets by searching for an independent transversal of the
/// union of their block conditions.
DisjointnessReport appendix_a_classes_disjoint(const AppendixA& g);

struct AppendixBConfig {
  int n = 8;
  int d = 3;
};
/// Z_{2n} with D = {-d + 2i : 0 <= i <= d}.
CayleyGraph build_appendix_b(const AppendixBConfig& cfg);

struct AppendixBReport {
  int records = 0;
  bool intervals = true;         // every closed record is an interval of X
  bool progressions = true;      // N(A) is a difference-2 progression
  bool excess_is_d = true;       // g = a + d on every record
  bool table_zero_elsewhere = true;
  std::map<std::pair<int, int>, BigCount> table;
  std::map<std::pair<int, int>, double> ratio;  // G(a,g) / (n 2^{g-d})
  double min_full_fraction = 1;  // min over records of #{A in [A]: N(A) = G} / 2^a
  bool ok() const {
    return intervals && progressions && excess_is_d && table_zero_elsewhere;
  }
};
AppendixBReport appendix_b_structure_check(const AppendixBConfig& cfg);

/// True when s (a set of even residues mod 2n) is a run of consecutive
/// even residues, cyclically.
bool is_cyclic_progression(const VertexSet& s, int modulus, int step, int* start = nullptr);

}  // namespace cayley
