#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cayley/vertex_set.hpp"

namespace cayley {

/// A coordinate vector; coords[i] is a residue modulo factor i.
struct Element {
  std::vector<int> coords;
  friend bool operator==(const Element&, const Element&) = default;
};

/// Finite Abelian group Z_{m1} x ... x Z_{mk}.
///
/// Elements are identified with ids in [0, order) by mixed-radix rank, first
/// coordinate most significant, so element ids double as Cayley-graph vertex
/// ids. Two specs compare equal when they describe isomorphic groups; use
/// same_coordinates() to compare the coordinate systems themselves.
class GroupSpec {
 public:
  GroupSpec() = default;

  /// Keeps `factors` as the coordinate system, without canonicalizing.
  static GroupSpec with_coordinates(std::vector<int> factors);

  const std::vector<int>& factors() const noexcept { return factors_; }
  int order() const noexcept { return order_; }
  int rank() const noexcept { return static_cast<int>(factors_.size()); }

  /// Invariant-factor form m1 | m2 | ... | mk.
  std::vector<int> invariant_factors() const;
  bool is_canonical() const { return invariant_factors() == factors_; }
  bool same_coordinates(const GroupSpec& o) const {
    return factors_ == o.factors_;
  }
  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.invariant_factors() == b.invariant_factors();
  }

  int id(const Element& e) const;
  Element element(int id) const;
  bool valid(const Element& e) const;

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  /// k-fold sum of a; k may be negative.
  int scale(int a, long long k) const;
  int element_order(int a) const;

  /// "Z2xZ4"; a single factor prints as "Z8".
  std::string to_string() const;

 private:
  std::vector<int> factors_;
  std::vector<int> strides_;
  int order_ = 0;
};

/// Validated, canonicalized group (invariant-factor form).
GroupSpec make_group(const std::vector<int>& factors);

/// Parses "Z2xZ4" (also accepts "Z_2 x Z_4"). Keeps the written coordinates.
/// Throws InvalidSpec with the offending character position.
GroupSpec parse_group(std::string_view text);

/// One canonical representative per isomorphism class, sorted by factors.
std::vector<GroupSpec> enumerate_abelian_groups(int order);

/// Symmetric generator set D = -D with 0 not in D.
class GeneratorSet {
 public:
  GeneratorSet() = default;

  const GroupSpec& group() const noexcept { return group_; }
  const VertexSet& elements() const noexcept { return elems_; }
  std::vector<int> ids() const { return elems_.members(); }
  int size() const noexcept { return elems_.count(); }
  /// |2D|, computed on first use.
  int doubling() const;

 private:
  friend GeneratorSet make_generators(const GroupSpec&, const std::vector<int>&,
                                      bool);
  GroupSpec group_;
  VertexSet elems_;
  mutable int d2_ = -1;
};

/// Validates (or, with symmetrize, closes under negation) a generator list
/// given as element ids. Throws InvalidGenerators on 0 in D, empty D, or
/// asymmetric D without symmetrize.
GeneratorSet make_generators(const GroupSpec& group, const std::vector<int>& ids,
                             bool symmetrize = false);
GeneratorSet make_generators(const GroupSpec& group,
                             const std::vector<Element>& elems,
                             bool symmetrize = false);

/// Closure of S u {0} under addition.
VertexSet subgroup_generated(const GroupSpec& group, const VertexSet& s);
bool is_generating(const GroupSpec& group, const VertexSet& s);

/// (X, Y) = (ker chi, coset) for a homomorphism chi: G -> Z2 with chi = 1 on
/// all of D; the lexicographically smallest chi is used. Empty when the
/// Cayley graph has an odd cycle.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(
    const GroupSpec& group, const GeneratorSet& gens);

/// All symmetric generator sets without 0, as id lists (2^orbits - 1 sets).
std::vector<std::vector<int>> all_symmetric_generator_sets(
    const GroupSpec& group);

}  // namespace cayley
