#pragma once

#include <initializer_list>
#include <vector>

#include "alphastab/generators.hpp"
#include "alphastab/graph.hpp"

namespace named {

using alphastab::Edge;
using alphastab::Graph;

inline Graph make(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.emplace_back(a, b);
  return Graph(n, edges);
}

inline Graph k1() { return Graph(1); }
inline Graph k2() { return make(2, {{0, 1}}); }
inline Graph p3() { return alphastab::path(3); }
inline Graph p4() { return alphastab::path(4); }
inline Graph c4() { return alphastab::even_cycle(4); }
inline Graph c6() { return alphastab::even_cycle(6); }
inline Graph c6_chord() { return alphastab::even_cycle(6).with_edge(Edge(0, 3)); }
inline Graph k33() { return alphastab::complete_bipartite(3, 3); }
inline Graph triangle() { return make(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Graph star3() { return make(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline Graph k4() { return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline Graph c5() { return make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }
// Spider with three legs of length 2 around center 0.
inline Graph spider() { return make(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }
inline Graph petersen() {
  return make(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                   {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}
// Two 4-cycles 0..3 and 4..7 joined by 0-5.
inline Graph two_c4_bridge() {
  return make(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 5}});
}

}  // namespace named
