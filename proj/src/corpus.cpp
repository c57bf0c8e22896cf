#include "cayley/corpus.hpp"

#include <sstream>

#include "cayley/errors.hpp"

namespace cayley {

CayleyGraph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "cycle needs n >= 3");
  GroupSpec z = make_group({n});
  return build_cayley(z, make_generators(z, std::vector<int>{1, n - 1}));
}

CayleyGraph complete_bipartite(int d) {
  if (d < 1) throw Error(ErrorKind::InvalidInput, "K_{d,d} needs d >= 1");
  GroupSpec z = make_group({2 * d});
  std::vector<int> odd;
  for (int x = 1; x < 2 * d; x += 2) odd.push_back(x);
  return build_cayley(z, make_generators(z, odd));
}

Graph edgeless_graph(int n) { return Graph(n); }

std::string describe(const CayleyGraph& g) {
  std::ostringstream os;
  os << g.group().to_string() << " D={";
  bool first = true;
  for (int x : g.generators().ids()) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << '}';
  return os.str();
}

void for_each_cayley_graph(int min_order, int max_order,
                           const std::function<void(const CayleyGraph&)>& visit) {
  for (int order = std::max(2, min_order); order <= max_order; ++order)
    for (const GroupSpec& group : enumerate_abelian_groups(order))
      for (const auto& ids : all_symmetric_generator_sets(group))
        visit(build_cayley(group, make_generators(group, ids)));
}

}  // namespace cayley
