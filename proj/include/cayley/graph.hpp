#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/vertex_set.hpp"

namespace cayley {

struct Bipartition {
  VertexSet x;
  VertexSet y;
};

/// Simple undirected graph with per-vertex adjacency bitsets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  static Graph from_edges(int vertex_count,
                          const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  const VertexSet& adj(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  /// Throws InvalidInput on self-loops.
  void add_edge(int u, int v);

  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;
  int max_degree() const;
  /// Degree if every vertex has the same degree, otherwise -1.
  int regular_degree() const;
  bool is_connected() const;

  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet all() const { return VertexSet::full(vertex_count()); }

  /// N(A): union of adjacency rows.
  VertexSet neighborhood(const VertexSet& a) const;
  /// N^i(A); N^0(A) = A.
  VertexSet neighborhood(const VertexSet& a, int i) const;
  /// Number of neighbours of v inside s.
  int degree_into(int v, const VertexSet& s) const {
    return adj_[v].intersection_count(s);
  }

  const std::optional<Bipartition>& parts() const noexcept { return parts_; }
  bool is_bipartite() const noexcept { return parts_.has_value(); }
  /// Installs a bipartition after checking every edge crosses it.
  void set_parts(Bipartition parts);
  /// 2-colours each component (smallest id of a component goes to X) and
  /// installs the result. Returns false when an odd cycle exists.
  bool detect_bipartition();

 private:
  std::vector<VertexSet> adj_;
  std::optional<Bipartition> parts_;
};

/// Cayley graph of (group, D): vertices are element ids, u ~ u + x for x in D.
class CayleyGraph {
 public:
  CayleyGraph() = default;
  CayleyGraph(GroupSpec group, GeneratorSet gens, Graph graph)
      : group_(std::move(group)), gens_(std::move(gens)), graph_(std::move(graph)) {}

  const GroupSpec& group() const noexcept { return group_; }
  const GeneratorSet& generators() const noexcept { return gens_; }
  const Graph& graph() const noexcept { return graph_; }
  int degree() const { return gens_.size(); }
  int vertex_count() const { return graph_.vertex_count(); }

 private:
  GroupSpec group_;
  GeneratorSet gens_;
  Graph graph_;
};

/// d-regular undirected Cayley graph; parts populated iff bipartite.
CayleyGraph build_cayley(const GroupSpec& group, const GeneratorSet& gens);

/// Tensor double cover, realised as the Cayley graph on F x Z2 with D x {1}.
/// Vertex (u, b) gets id 2u + b.
CayleyGraph times_k2(const CayleyGraph& g);
/// Tensor double cover of an arbitrary graph; (v, b) -> 2v + b.
Graph times_k2(const Graph& g);

enum class Side { X, Y };

/// A set together with its closure, neighbourhood and boundary.
struct ClosedSetRecord {
  VertexSet set;       // A
  VertexSet closure;   // [A]
  VertexSet nbhd;      // G = N(A)
  VertexSet boundary;  // G' = {v in G : N(v) not inside [A]}
  Side side = Side::X;
  int n = 0;           // side size |X| = |Y|
  int a = 0;
  int g = 0;
  int t = 0;

  bool small() const { return 2 * a <= n; }
};

/// Requires a bipartite graph and A inside one part (InvalidInput otherwise).
ClosedSetRecord closure(const Graph& g, const VertexSet& a);
/// Same, with the side given explicitly (needed for A = empty set).
ClosedSetRecord closure(const Graph& g, const VertexSet& a, Side side);

/// Vertices of `side` sharing a neighbour with v (v itself excluded).
VertexSet square_neighbors(const Graph& g, int v);

/// Components of A in the square graph, ordered by smallest member.
std::vector<VertexSet> two_linked_components(const Graph& g, const VertexSet& a);
bool is_two_linked(const Graph& g, const VertexSet& a);

/// G_alpha = {u in G : d_[A](u) >= alpha}.
VertexSet g_alpha(const Graph& g, const ClosedSetRecord& rec, double alpha);

enum class ConnectivityMode { Edge, Vertex };

/// Exact edge or vertex connectivity via unit-capacity max-flow; 0 when
/// disconnected. The complete graph K_n has vertex connectivity n - 1.
int connectivity(const Graph& g, ConnectivityMode mode);

}  // namespace cayley
