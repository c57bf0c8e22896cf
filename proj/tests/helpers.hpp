#pragma once

#include <initializer_list>

#include "cayley/vertex_set.hpp"

inline cayley::VertexSet vs(int universe, std::initializer_list<int> members) {
  cayley::VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}
