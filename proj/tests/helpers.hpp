#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "pvds/instance.hpp"

namespace pvds::test {

inline Instance graph(int n, std::initializer_list<std::pair<int, int>> edges, std::vector<int> demands = {},
                      int k = 0) {
  Instance inst(n, k);
  for (auto [u, v] : edges) inst.add_edge(u, v);
  for (int v = 0; v < static_cast<int>(demands.size()); ++v) inst.set_demand(v, demands[v]);
  return inst;
}

inline Instance complete(int n) {
  Instance inst(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) inst.add_edge(u, v);
  return inst;
}

inline Instance cycle(int n) {
  Instance inst(n);
  for (int v = 0; v < n; ++v) inst.add_edge(v, (v + 1) % n);
  return inst;
}

inline Instance with_demand(Instance inst, int d) {
  for (Vertex v : inst.vertices()) inst.set_demand(v, d);
  return inst;
}

}  // namespace pvds::test
