#include "alphastab/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace alphastab {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

bool usable(const MatchingMask& mask, Vertex a, Vertex b) {
  return !mask.vertex_removed(a) && !mask.vertex_removed(b) && !mask.edge_removed(a, b);
}

Matching from_partners(const std::vector<Vertex>& partner) {
  EdgeList edges;
  for (Vertex v = 0; v < static_cast<Vertex>(partner.size()); ++v) {
    if (partner[v] > v) edges.emplace_back(v, partner[v]);
  }
  return Matching(static_cast<int>(partner.size()), edges);
}

std::vector<Vertex> to_partners(const Matching& m) {
  std::vector<Vertex> partner(m.order(), kUnmatched);
  for (Vertex v = 0; v < m.order(); ++v) partner[v] = m.partner(v);
  return partner;
}

class HopcroftKarp {
 public:
  HopcroftKarp(const Graph& g, const Bipartition& b, const MatchingMask& mask)
      : g_(g), b_(b), mask_(mask), partner_(g.order(), kUnmatched),
        dist_(g.order(), kInf), next_(g.order(), 0) {}

  std::vector<Vertex> run() {
    while (layer()) {
      std::fill(next_.begin(), next_.end(), 0);
      for (Vertex a : b_.class_a) {
        if (!mask_.vertex_removed(a) && partner_[a] == kUnmatched) augment_from(a);
      }
    }
    return std::move(partner_);
  }

 private:
  bool layer() {
    std::deque<Vertex> queue;
    for (Vertex a : b_.class_a) {
      if (!mask_.vertex_removed(a) && partner_[a] == kUnmatched) {
        dist_[a] = 0;
        queue.push_back(a);
      } else {
        dist_[a] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const Vertex a = queue.front();
      queue.pop_front();
      for (Vertex w : g_.neighbors(a)) {
        if (!usable(mask_, a, w)) continue;
        const Vertex mate = partner_[w];
        if (mate == kUnmatched) {
          found = true;
        } else if (dist_[mate] == kInf) {
          dist_[mate] = dist_[a] + 1;
          queue.push_back(mate);
        }
      }
    }
    return found;
  }

  // Iterative depth-first search along the layered graph.
  bool augment_from(Vertex root) {
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex a = stack.back();
      const auto& nbrs = g_.neighbors(a);
      if (next_[a] == static_cast<int>(nbrs.size())) {
        dist_[a] = kInf;
        stack.pop_back();
        if (!stack.empty()) ++next_[stack.back()];
        continue;
      }
      const Vertex w = nbrs[next_[a]];
      if (!usable(mask_, a, w)) {
        ++next_[a];
        continue;
      }
      const Vertex mate = partner_[w];
      if (mate == kUnmatched) {
        for (Vertex x : stack) {
          const Vertex y = g_.neighbors(x)[next_[x]];
          partner_[x] = y;
          partner_[y] = x;
        }
        return true;
      }
      if (dist_[mate] == dist_[a] + 1) {
        stack.push_back(mate);
      } else {
        ++next_[a];
      }
    }
    return false;
  }

  const Graph& g_;
  const Bipartition& b_;
  const MatchingMask& mask_;
  std::vector<Vertex> partner_;
  std::vector<int> dist_;
  std::vector<int> next_;
};

}  // namespace

Matching::Matching(int n, std::span<const Edge> edges) : Matching(n) {
  for (const Edge& e : edges) add(e);
}

void Matching::add(const Edge& e) {
  if (e.u < 0 || e.v >= order() || e.u == e.v) {
    throw Error(ErrorCode::vertex_out_of_range, "matching edge " + format_edge(e));
  }
  if (partner_[e.u] != kUnmatched || partner_[e.v] != kUnmatched) {
    throw Error(ErrorCode::invalid_argument, "edge " + format_edge(e) + " shares an endpoint");
  }
  partner_[e.u] = e.v;
  partner_[e.v] = e.u;
  ++size_;
}

void Matching::remove(const Edge& e) {
  if (!contains(e)) {
    throw Error(ErrorCode::invalid_argument, "edge " + format_edge(e) + " not in matching");
  }
  partner_[e.u] = kUnmatched;
  partner_[e.v] = kUnmatched;
  --size_;
}

void Matching::unmatch(Vertex v) {
  if (partner_[v] != kUnmatched) remove(Edge(v, partner_[v]));
}

EdgeList Matching::edges() const {
  EdgeList out;
  for (Vertex v = 0; v < order(); ++v) {
    if (partner_[v] > v) out.emplace_back(v, partner_[v]);
  }
  return out;
}

bool MatchingMask::edge_removed(Vertex a, Vertex b) const {
  if (removed_edges.empty()) return false;
  const Edge e(a, b);
  return std::find(removed_edges.begin(), removed_edges.end(), e) != removed_edges.end();
}

bool is_matching_of(const Graph& g, const Matching& m) {
  if (m.order() != g.order()) return false;
  for (Vertex v = 0; v < m.order(); ++v) {
    const Vertex w = m.partner(v);
    if (w == kUnmatched) continue;
    if (m.partner(w) != v || !g.has_edge(v, w)) return false;
  }
  return true;
}

Matching maximum_matching(const Graph& g, const Bipartition& b) {
  return maximum_matching(g, b, MatchingMask{});
}

Matching maximum_matching(const Graph& g, const Bipartition& b, const MatchingMask& mask) {
  return from_partners(HopcroftKarp(g, b, mask).run());
}

bool augment_once(const Graph& g, const Bipartition& b, Matching& m, const MatchingMask& mask) {
  const int n = g.order();
  std::vector<Vertex> partner = to_partners(m);
  // parent[w] for B vertices: the A vertex that reached it.
  std::vector<Vertex> parent(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<Vertex> queue;
  for (Vertex a : b.class_a) {
    if (!mask.vertex_removed(a) && partner[a] == kUnmatched) {
      seen[a] = true;
      queue.push_back(a);
    }
  }
  while (!queue.empty()) {
    const Vertex a = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(a)) {
      if (seen[w] || !usable(mask, a, w)) continue;
      seen[w] = true;
      parent[w] = a;
      const Vertex mate = partner[w];
      if (mate == kUnmatched) {
        Vertex y = w;
        while (y != -1) {
          const Vertex x = parent[y];
          const Vertex next = partner[x];
          partner[x] = y;
          partner[y] = x;
          y = next == kUnmatched ? -1 : next;
        }
        m = from_partners(partner);
        return true;
      }
      if (!seen[mate]) {
        seen[mate] = true;
        queue.push_back(mate);
      }
    }
  }
  return false;
}

int matching_number(const Graph& g, const Bipartition& b) {
  return maximum_matching(g, b).size();
}

int alpha(const Graph& g, const Bipartition& b) {
  return g.order() - matching_number(g, b);
}

VertexSet konig_cover(const Graph& g, const Bipartition& b, const Matching& m) {
  const int n = g.order();
  std::vector<bool> reached(n, false);
  std::deque<Vertex> queue;
  for (Vertex a : b.class_a) {
    if (!m.is_matched(a)) {
      reached[a] = true;
      queue.push_back(a);
    }
  }
  while (!queue.empty()) {
    const Vertex a = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(a)) {
      if (reached[w] || m.partner(a) == w) continue;
      reached[w] = true;
      const Vertex mate = m.partner(w);
      if (mate != kUnmatched && !reached[mate]) {
        reached[mate] = true;
        queue.push_back(mate);
      }
    }
  }
  VertexSet cover;
  for (Vertex v = 0; v < n; ++v) {
    if (b.in_a(v) != reached[v]) cover.push_back(v);
  }
  return cover;
}

StableSet maximum_stable_set(const Graph& g, const Bipartition& b) {
  const VertexSet cover = konig_cover(g, b, maximum_matching(g, b));
  StableSet s;
  s.is_maximum = true;
  std::vector<bool> in_cover(g.order(), false);
  for (Vertex v : cover) in_cover[v] = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!in_cover[v]) s.members.push_back(v);
  }
  return s;
}

bool has_perfect_matching(const Graph& g, const Bipartition& b) {
  return g.order() % 2 == 0 && 2 * matching_number(g, b) == g.order();
}

VertexSet stable_core(const Graph& g, const Bipartition& b) {
  const Matching m = maximum_matching(g, b);
  VertexSet core;
  MatchingMask mask;
  mask.removed_vertices.assign(g.order(), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    // v is in every stability system iff mu(G - v) = mu(G).
    if (!m.is_matched(v)) {
      core.push_back(v);
      continue;
    }
    Matching trial = m;
    trial.unmatch(v);
    mask.removed_vertices[v] = true;
    if (augment_once(g, b, trial, mask)) core.push_back(v);
    mask.removed_vertices[v] = false;
  }
  return core;
}

EdgeList matching_core(const Graph& g, const Bipartition& b) {
  const Matching m = maximum_matching(g, b);
  EdgeList core;
  for (const Edge& e : m.edges()) {
    Matching trial = m;
    trial.remove(e);
    MatchingMask mask;
    mask.removed_edges.push_back(e);
    if (!augment_once(g, b, trial, mask)) core.push_back(e);
  }
  return core;
}

Graph alpha_preserving_spanning_tree(const Graph& g, const Bipartition& b) {
  if (!is_connected(g)) throw Error(ErrorCode::not_connected, "spanning tree needs a connected graph");
  const int n = g.order();
  std::vector<Vertex> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](Vertex v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  EdgeList tree = maximum_matching(g, b).edges();
  for (const Edge& e : tree) root[find(e.u)] = find(e.v);
  for (const Edge& e : g.edges()) {
    const Vertex ru = find(e.u);
    const Vertex rv = find(e.v);
    if (ru != rv) {
      root[ru] = rv;
      tree.push_back(e);
    }
  }
  return Graph(n, tree);
}

}  // namespace alphastab
