#include "alphastab/chordal.hpp"

#include <algorithm>
#include <deque>

namespace alphastab {

namespace {

// Shortest path from x to y avoiding every vertex flagged in blocked.
std::vector<Vertex> shortest_path(const Graph& g, Vertex x, Vertex y,
                                  const std::vector<bool>& blocked) {
  std::vector<Vertex> parent(g.order(), -1);
  std::vector<bool> seen(g.order(), false);
  std::deque<Vertex> queue{x};
  seen[x] = true;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    if (u == y) break;
    for (Vertex w : g.neighbors(u)) {
      if (seen[w] || blocked[w]) continue;
      seen[w] = true;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (!seen[y]) return {};
  std::vector<Vertex> path;
  for (Vertex u = y; u != -1; u = parent[u]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

// Chordless cycle v, x, ..., y through the non-adjacent neighbors x, y of v.
std::vector<Vertex> cycle_through(const Graph& g, Vertex v, Vertex x, Vertex y) {
  std::vector<bool> blocked(g.order(), false);
  blocked[v] = true;
  for (Vertex w : g.neighbors(v)) blocked[w] = (w != x && w != y);
  std::vector<Vertex> path = shortest_path(g, x, y, blocked);
  if (path.empty()) return {};
  path.insert(path.begin(), v);
  return path;
}

std::vector<Vertex> find_chordless_cycle(const Graph& g, const std::vector<int>& position) {
  // Try the first violation of the elimination property.
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v]) later.push_back(w);
    }
    for (std::size_t i = 0; i < later.size(); ++i) {
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        if (g.has_edge(later[i], later[j])) continue;
        if (auto c = cycle_through(g, v, later[i], later[j]); !c.empty()) return c;
      }
    }
  }
  // Any chordless cycle passes through some vertex with two non-adjacent
  // neighbors joined outside its closed neighborhood.
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.has_edge(nbrs[i], nbrs[j])) continue;
        if (auto c = cycle_through(g, v, nbrs[i], nbrs[j]); !c.empty()) return c;
      }
    }
  }
  return {};
}

std::vector<int> positions(int n, const std::vector<Vertex>& order) {
  std::vector<int> position(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  return position;
}

void require_tree(const Graph& g) {
  if (!is_tree(g)) throw Error(ErrorCode::not_a_tree, "graph is not a tree");
}

}  // namespace

std::vector<Vertex> lex_bfs_order(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> label(n);
  std::vector<bool> numbered(n, false);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (int step = n; step > 0; --step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!numbered[v] && (best == -1 || label[v] > label[best])) best = v;
    }
    numbered[best] = true;
    visit.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      if (!numbered[w]) label[w].push_back(step);
    }
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& peo) {
  const int n = g.order();
  if (static_cast<int>(peo.order.size()) != n) return false;
  std::vector<int> position(n, -1);
  for (std::size_t i = 0; i < peo.order.size(); ++i) {
    const Vertex v = peo.order[i];
    if (v < 0 || v >= n || position[v] != -1) return false;
    position[v] = static_cast<int>(i);
  }
  for (Vertex v = 0; v < n; ++v) {
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v] && (parent == -1 || position[w] < position[parent])) parent = w;
    }
    if (parent == -1) continue;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v] && w != parent && !g.has_edge(parent, w)) return false;
    }
  }
  return true;
}

ChordalityResult is_chordal(const Graph& g) {
  EliminationOrder peo{lex_bfs_order(g)};
  ChordalityResult result;
  if (is_perfect_elimination_order(g, peo)) {
    result.peo = std::move(peo);
  } else {
    result.chordless_cycle = find_chordless_cycle(g, positions(g.order(), peo.order));
  }
  return result;
}

StableSet chordal_maximum_stable_set(const Graph& g, const EliminationOrder& peo) {
  if (!is_perfect_elimination_order(g, peo)) {
    throw Error(ErrorCode::invalid_peo, "order is not a perfect elimination order");
  }
  std::vector<bool> blocked(g.order(), false);
  StableSet s;
  s.is_maximum = true;
  for (Vertex v : peo.order) {
    if (blocked[v]) continue;
    s.members.push_back(v);
    for (Vertex w : g.neighbors(v)) blocked[w] = true;
  }
  std::sort(s.members.begin(), s.members.end());
  return s;
}

ChordalAlphaMinus chordal_alpha_minus(const Graph& g) {
  const ChordalityResult chordal = is_chordal(g);
  if (!chordal.chordal()) {
    throw Error(ErrorCode::not_chordal,
                "chordless cycle " + format_vertices(chordal.chordless_cycle));
  }
  ChordalAlphaMinus out;
  out.stability_system = chordal_maximum_stable_set(g, *chordal.peo).members;
  const DominationCheck dom = is_n_dominating(g, out.stability_system, 2);
  out.stable = dom.dominating;
  out.under_dominated = dom.witness;
  return out;
}

bool tree_strong_unique_independence(const Graph& g) {
  require_tree(g);
  if (g.order() < 3) throw Error(ErrorCode::order_too_small, "tree needs at least 3 vertices");
  const Bipartition b = require_bipartition(g);
  const VertexSet pendants = pendant_vertices(g);
  return std::all_of(pendants.begin(), pendants.end(),
                     [&](Vertex v) { return b.side[v] == b.side[pendants.front()]; });
}

TreeAlphaPlus tree_alpha_plus(const Graph& g) {
  require_tree(g);
  const int n = g.order();
  if (n < 2) throw Error(ErrorCode::order_too_small, "tree needs at least 2 vertices");
  TreeAlphaPlus out;
  out.matching = Matching(n);
  std::vector<int> degree(n);
  std::vector<bool> removed(n, false);
  std::deque<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const Vertex v = leaves.front();
    leaves.pop_front();
    if (removed[v]) continue;
    Vertex u = -1;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w]) u = w;
    }
    if (u == -1) break;  // isolated leftover: no perfect matching
    out.matching.add(Edge(v, u));
    removed[v] = removed[u] = true;
    for (Vertex w : g.neighbors(u)) {
      if (removed[w]) continue;
      if (--degree[w] == 1) leaves.push_back(w);
    }
  }
  out.stable = out.matching.is_perfect();
  const bool path_shaped = std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return g.degree(e.u) <= 2 && g.degree(e.v) <= 2;
  });
  out.is_path_2n = path_shaped && n % 2 == 0;
  return out;
}

}  // namespace alphastab
