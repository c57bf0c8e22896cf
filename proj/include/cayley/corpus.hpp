#pragma once

#include <functional>
#include <string>

#include "cayley/graph.hpp"

namespace cayley {

/// C_n as the Cayley graph of Z_n with D = {1, -1}; n >= 3.
CayleyGraph cycle_graph(int n);
/// K_{d,d} as the Cayley graph of Z_{2d} with D = the odd residues.
CayleyGraph complete_bipartite(int d);
Graph edgeless_graph(int n);

/// "Z2xZ4 D={1,3,5}"
std::string describe(const CayleyGraph& g);

/// Visits every Cayley graph over every Abelian group of order in
/// [min_order, max_order] and every symmetric generator set.
void for_each_cayley_graph(int min_order, int max_order,
                           const std::function<void(const CayleyGraph&)>& visit);

}  // namespace cayley
