#include "cayley/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "cayley/errors.hpp"

namespace cayley {

Graph::Graph(int vertex_count)
    : adj_(static_cast<std::size_t>(vertex_count), VertexSet(vertex_count)) {}

Graph Graph::from_edges(int vertex_count,
                        const std::vector<std::pair<int, int>>& edges) {
  Graph g(vertex_count);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw Error(ErrorKind::InvalidInput, "edge endpoint out of range");
  if (u == v) throw Error(ErrorKind::InvalidInput, "self-loop not allowed");
  adj_[u].insert(v);
  adj_[v].insert(u);
  parts_.reset();
}

int Graph::edge_count() const {
  int s = 0;
  for (const auto& row : adj_) s += row.count();
  return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

int Graph::max_degree() const {
  int m = 0;
  for (const auto& row : adj_) m = std::max(m, row.count());
  return m;
}

int Graph::regular_degree() const {
  if (adj_.empty()) return 0;
  int d = adj_[0].count();
  for (const auto& row : adj_)
    if (row.count() != d) return -1;
  return d;
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return true;
  VertexSet seen(vertex_count());
  seen.insert(0);
  std::deque<int> q{0};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    adj_[u].for_each([&](int v) {
      if (!seen.contains(v)) {
        seen.insert(v);
        q.push_back(v);
      }
    });
  }
  return seen.count() == vertex_count();
}

VertexSet Graph::neighborhood(const VertexSet& a) const {
  VertexSet out(vertex_count());
  a.for_each([&](int v) { out |= adj_[v]; });
  return out;
}

VertexSet Graph::neighborhood(const VertexSet& a, int i) const {
  if (i < 0) throw Error(ErrorKind::InvalidInput, "neighbourhood power < 0");
  VertexSet cur = a;
  for (int k = 0; k < i; ++k) cur = neighborhood(cur);
  return cur;
}

void Graph::set_parts(Bipartition parts) {
  if (parts.x.universe() != vertex_count() || parts.y.universe() != vertex_count())
    throw Error(ErrorKind::InvalidInput, "bipartition universe mismatch");
  if (parts.x.intersects(parts.y) ||
      (parts.x | parts.y).count() != vertex_count())
    throw Error(ErrorKind::InvalidInput, "bipartition is not a partition");
  for (int u = 0; u < vertex_count(); ++u) {
    const VertexSet& same = parts.x.contains(u) ? parts.x : parts.y;
    if (adj_[u].intersects(same))
      throw Error(ErrorKind::InvalidInput, "edge inside a bipartition class");
  }
  parts_ = std::move(parts);
}

bool Graph::detect_bipartition() {
  std::vector<int> colour(static_cast<std::size_t>(vertex_count()), -1);
  for (int s = 0; s < vertex_count(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      bool odd = false;
      adj_[u].for_each([&](int v) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          q.push_back(v);
        } else if (colour[v] == colour[u]) {
          odd = true;
        }
      });
      if (odd) {
        parts_.reset();
        return false;
      }
    }
  }
  Bipartition p{VertexSet(vertex_count()), VertexSet(vertex_count())};
  for (int v = 0; v < vertex_count(); ++v) (colour[v] ? p.y : p.x).insert(v);
  parts_ = std::move(p);
  return true;
}

CayleyGraph build_cayley(const GroupSpec& group, const GeneratorSet& gens) {
  if (!(gens.group().same_coordinates(group)))
    throw Error(ErrorKind::InvalidGenerators,
                "generator set belongs to a different group");
  const int n = group.order();
  Graph g(n);
  std::vector<int> d = gens.ids();
  for (int u = 0; u < n; ++u)
    for (int x : d) {
      int v = group.add(u, x);
      if (u < v) g.add_edge(u, v);
    }
  if (g.regular_degree() != static_cast<int>(d.size()))
    throw Error(ErrorKind::TheoremViolation, "Cayley graph is not |D|-regular");
  if (auto parts = bipartition(group, gens))
    g.set_parts(Bipartition{std::move(parts->first), std::move(parts->second)});
  return CayleyGraph(group, gens, std::move(g));
}

CayleyGraph times_k2(const CayleyGraph& cg) {
  const GroupSpec& f = cg.group();
  std::vector<int> factors = f.factors();
  factors.push_back(2);
  GroupSpec fk = GroupSpec::with_coordinates(factors);
  std::vector<int> ids;
  for (int x : cg.generators().ids()) ids.push_back(2 * x + 1);
  return build_cayley(fk, make_generators(fk, ids));
}

Graph times_k2(const Graph& g) {
  Graph out(2 * g.vertex_count());
  for (auto [u, v] : g.edges()) {
    out.add_edge(2 * u, 2 * v + 1);
    out.add_edge(2 * v, 2 * u + 1);
  }
  out.detect_bipartition();
  return out;
}

namespace {

const Bipartition& require_parts(const Graph& g) {
  if (!g.parts())
    throw Error(ErrorKind::InvalidInput, "operation requires a bipartite graph");
  return *g.parts();
}

}  // namespace

ClosedSetRecord closure(const Graph& g, const VertexSet& a, Side side) {
  const Bipartition& p = require_parts(g);
  const VertexSet& own = side == Side::X ? p.x : p.y;
  if (!a.is_subset_of(own))
    throw Error(ErrorKind::InvalidInput, "set is not inside the requested part");
  ClosedSetRecord r;
  r.set = a;
  r.side = side;
  r.n = own.count();
  r.nbhd = g.neighborhood(a);
  r.closure = VertexSet(g.vertex_count());
  own.for_each([&](int u) {
    if (g.adj(u).is_subset_of(r.nbhd)) r.closure.insert(u);
  });
  r.boundary = VertexSet(g.vertex_count());
  r.nbhd.for_each([&](int v) {
    if (!g.adj(v).is_subset_of(r.closure)) r.boundary.insert(v);
  });
  r.a = r.closure.count();
  r.g = r.nbhd.count();
  r.t = r.g - r.a;
  return r;
}

ClosedSetRecord closure(const Graph& g, const VertexSet& a) {
  const Bipartition& p = require_parts(g);
  if (a.is_subset_of(p.x)) return closure(g, a, Side::X);
  if (a.is_subset_of(p.y)) return closure(g, a, Side::Y);
  throw Error(ErrorKind::InvalidInput, "set straddles both parts");
}

VertexSet square_neighbors(const Graph& g, int v) {
  VertexSet out = g.neighborhood(g.adj(v));
  out.erase(v);
  return out;
}

std::vector<VertexSet> two_linked_components(const Graph& g, const VertexSet& a) {
  std::vector<VertexSet> comps;
  VertexSet left = a;
  while (!left.empty()) {
    int s = left.first();
    VertexSet comp(g.vertex_count());
    comp.insert(s);
    left.erase(s);
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      VertexSet next = square_neighbors(g, u) & left;
      next.for_each([&](int w) {
        comp.insert(w);
        left.erase(w);
        q.push_back(w);
      });
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_two_linked(const Graph& g, const VertexSet& a) {
  return !a.empty() && two_linked_components(g, a).size() == 1;
}

VertexSet g_alpha(const Graph& g, const ClosedSetRecord& rec, double alpha) {
  VertexSet out(g.vertex_count());
  rec.nbhd.for_each([&](int v) {
    if (g.degree_into(v, rec.closure) >= alpha) out.insert(v);
  });
  return out;
}

namespace {

// Unit-capacity max-flow by BFS augmentation on an explicit arc list.
class UnitFlow {
 public:
  explicit UnitFlow(int n) : head_(static_cast<std::size_t>(n), -1) {}

  void add_arc(int u, int v, int cap) {
    arcs_.push_back({v, cap, head_[u]});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, 0, head_[v]});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
  }

  int run(int s, int t, int limit) {
    for (auto& a : arcs_) a.flow = 0;
    int flow = 0;
    const int n = static_cast<int>(head_.size());
    std::vector<int> via(static_cast<std::size_t>(n));
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> q{s};
      via[s] = -2;
      while (!q.empty() && via[t] == -1) {
        int u = q.front();
        q.pop_front();
        for (int e = head_[u]; e >= 0; e = arcs_[e].next) {
          const Arc& a = arcs_[e];
          if (via[a.to] == -1 && a.cap - a.flow > 0) {
            via[a.to] = e;
            q.push_back(a.to);
          }
        }
      }
      if (via[t] == -1) break;
      for (int v = t; v != s;) {
        int e = via[v];
        arcs_[e].flow += 1;
        arcs_[e ^ 1].flow -= 1;
        v = arcs_[e ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int next;
    int flow = 0;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

int edge_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  UnitFlow f(n);
  for (auto [u, v] : g.edges()) {
    f.add_arc(u, v, 1);
    f.add_arc(v, u, 1);
  }
  int best = g.max_degree();
  for (int v = 1; v < n; ++v) best = std::min(best, f.run(0, v, best));
  return best;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  // Split v into v_in = 2v, v_out = 2v + 1.
  UnitFlow f(2 * n);
  const int inf = n;
  for (int v = 0; v < n; ++v) f.add_arc(2 * v, 2 * v + 1, 1);
  for (auto [u, v] : g.edges()) {
    f.add_arc(2 * u + 1, 2 * v, inf);
    f.add_arc(2 * v + 1, 2 * u, inf);
  }
  int best = n - 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, f.run(2 * s + 1, 2 * t, best));
    }
  return best;
}

}  // namespace

int connectivity(const Graph& g, ConnectivityMode mode) {
  if (g.vertex_count() <= 1) return 0;
  if (!g.is_connected()) return 0;
  return mode == ConnectivityMode::Edge ? edge_connectivity(g)
                                        : vertex_connectivity(g);
}

}  // namespace cayley
