#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cayley/graph.hpp"
#include "cayley/group.hpp"
#include "cayley/vertex_set.hpp"

namespace cayley {

// Sets of group elements are VertexSets over [0, order).

/// A + B; empty when either operand is empty.
VertexSet sumset(const GroupSpec& group, const VertexSet& a, const VertexSet& b);
/// M + iD with 0*D = {0}.
VertexSet iterated_sumset(const GroupSpec& group, const VertexSet& m,
                          const VertexSet& d, int i);
/// {x - a : x in s}.
VertexSet translate(const GroupSpec& group, const VertexSet& s, int shift);

/// Representation statistics of D + D over unordered pairs {x, y}, x != y.
struct SumsetStats {
  VertexSet base;
  int doubling = 0;         // |2D|, diagonal sums included
  std::map<int, int> reps;  // u -> r_u
  /// D_l = {u in 2D : r_u >= |D| / (2 alpha)}.
  VertexSet heavy(double alpha) const;
};
SumsetStats sumset_stats(const GroupSpec& group, const VertexSet& d);

struct Fact41Report {
  int m = 0;
  int d = 0;
  int t = 0;  // |M + D| - |M|
  int i = 0;
  long long lhs = 0;  // |M + iD|
  double rhs = 0;     // m + d^i t
  bool holds = false;
};
/// |M + iD| <= m + d^i t for i >= 2.
Fact41Report fact41_check(const GroupSpec& group, const VertexSet& m,
                          const VertexSet& d, int i);

struct PrpWitness {
  VertexSet witness;  // M'
  int m = 0;          // |M|
  int m_plus_d = 0;   // |M + D| = alpha |M|
  int lhs = 0;        // |M' + jD|
  int j = 0;
};
/// Largest M' in M with |M' + jD| <= alpha^j |M'| (exhaustive,
/// largest-first). InstanceTooLarge above `cap`; TheoremViolation if none.
PrpWitness prp_witness_search(const GroupSpec& group, const VertexSet& m,
                              const VertexSet& d, int j, int cap = 20);
/// The PRP inequality for a given M', evaluated exactly.
bool prp_inequality(const GroupSpec& group, const VertexSet& m,
                    const VertexSet& d, const VertexSet& m_prime, int j);

enum class OlsonBranch { Stabilized, Expanded, Violated };
const char* to_string(OlsonBranch b);

struct OlsonReport {
  OlsonBranch branch = OlsonBranch::Violated;  // theorem form, on N - a
  OlsonBranch corollary_branch = OlsonBranch::Violated;
  int shift = 0;  // a, with 0 in N - a
  int m = 0;
  int n = 0;
  int m_plus_n = 0;
  bool holds = false;
};
/// Both the 0-in-N theorem form (after shifting) and the corollary form.
OlsonReport olson_check(const GroupSpec& group, const VertexSet& m,
                        const VertexSet& n);

enum class SearchMode { Exhaustive, Greedy };

struct Pruse2Result {
  std::vector<VertexSet> chain;  // M = M^(0) >= ... >= M^(k)
  bool found = false;
  SearchMode mode = SearchMode::Exhaustive;
  int m = 0;
  int t = 0;
  double c = 4;
  int k = 0;
};
/// Searches for a chain with |M^(i-1) \ M^(i)| <= t/c and
/// |M^(i) + (i+1)D| <= m + (2i)^{i+1} c^i t. Exhaustive mode raises
/// TheoremViolation when no chain exists; greedy mode reports found=false.
Pruse2Result pruse2_witness_search(const GroupSpec& group, const VertexSet& m,
                                   const VertexSet& d, int k, double c,
                                   SearchMode mode = SearchMode::Exhaustive,
                                   int cap = 16);
bool pruse2_chain_valid(const GroupSpec& group, const VertexSet& m,
                        const VertexSet& d, const std::vector<VertexSet>& chain,
                        double c);

struct ThinningConfig {
  double alpha = 2;
  std::uint64_t seed = 1;
  double p() const { return 1.0 / (15.0 * alpha); }
};

struct ThinningResult {
  GeneratorSet thinned;   // D' = P u -P u S u -S
  VertexSet random_part;  // P
  VertexSet spanning;     // S
  bool precondition = false;  // |2D| <= alpha |D|
  bool symmetric = false;     // (1)
  bool generating = false;    // (2)
  bool size_window = false;   // (3) |D|/(20 alpha) <= |D'| <= 2|D|/(5 alpha)
  bool doubling = false;      // (4) |D' + D'| >= alpha |D'|
  int size = 0;
  int size_doubled = 0;
};
/// Random sparsification of a small-doubling generator set that keeps it
/// symmetric and generating. InvalidInput when D does not generate.
ThinningResult thin_generators(const GroupSpec& group, const GeneratorSet& d,
                               const ThinningConfig& cfg);

/// Greedy spanning subset: scan D by id, keep x iff it enlarges <S>.
VertexSet greedy_spanning_subset(const GroupSpec& group, const VertexSet& d);

struct InequalityCheck {
  bool applicable = false;  // hypotheses hold
  bool holds = true;        // only meaningful when applicable
  double lhs = 0;
  double rhs = 0;
  std::string note;
};

struct ExpansionReport {
  InequalityCheck basic;         // |2D| <= 2(alpha^2 - 1)|M|
  InequalityCheck near_full;     // |D + D'| >= |2D| (1 - 1/log^2 d)
  InequalityCheck second_nbhd;   // |M + D| >= |M| + |2D|/6
  bool all_hold() const { return basic.holds && near_full.holds && second_nbhd.holds; }
};
/// Checks the three expansion consequences of PRP + Olson for M inside one
/// part of a connected bipartite Cayley graph. Hypotheses that fail mark the
/// corresponding check as not applicable.
ExpansionReport basic_expansion_check(const CayleyGraph& g, const VertexSet& m);
/// |D + D'| >= |2D| (1 - 1/log2(d)^2) whenever |D \ D'| <= sqrt(d)/log2 d.
InequalityCheck near_full_sumset_check(const GroupSpec& group,
                                       const VertexSet& d,
                                       const VertexSet& d_prime);

}  // namespace cayley
