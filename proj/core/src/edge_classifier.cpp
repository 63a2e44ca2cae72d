#include "alphastab/edge_classifier.hpp"

#include <algorithm>
#include <deque>

namespace alphastab {

namespace {

void tarjan(MatchingDigraph& d) {
  const int count = static_cast<int>(d.nodes.size());
  std::vector<int> index(count, -1);
  std::vector<int> low(count, 0);
  std::vector<bool> on_stack(count, false);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;  // node, next out-arc position
  d.scc_id.assign(count, -1);
  d.scc_size.clear();
  int counter = 0;
  for (int root = 0; root < count; ++root) {
    if (index[root] != -1) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [x, pos] = call.back();
      if (pos < d.out[x].size()) {
        const int y = d.arcs[d.out[x][pos++]].to;
        if (index[y] == -1) {
          index[y] = low[y] = counter++;
          stack.push_back(y);
          on_stack[y] = true;
          call.emplace_back(y, 0);
        } else if (on_stack[y]) {
          low[x] = std::min(low[x], index[y]);
        }
        continue;
      }
      const int done = x;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        const int id = static_cast<int>(d.scc_size.size());
        int size = 0;
        int y = -1;
        do {
          y = stack.back();
          stack.pop_back();
          on_stack[y] = false;
          d.scc_id[y] = id;
          ++size;
        } while (y != done);
        d.scc_size.push_back(size);
      }
    }
  }
}

std::vector<bool> reach(const MatchingDigraph& d, bool forward) {
  const int count = static_cast<int>(d.nodes.size());
  std::vector<std::vector<int>> adj(count);
  for (const auto& arc : d.arcs) {
    if (forward) {
      adj[arc.from].push_back(arc.to);
    } else {
      adj[arc.to].push_back(arc.from);
    }
  }
  std::vector<bool> seen(count, false);
  std::deque<int> queue;
  for (int x = 0; x < count; ++x) {
    const auto& node = d.nodes[x];
    const bool free_a = node.a != kUnmatched && node.b == kUnmatched;
    const bool free_b = node.b != kUnmatched && node.a == kUnmatched;
    if (forward ? free_a : free_b) {
      seen[x] = true;
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

EdgeClassification empty_classification(const Graph& g, Matching m) {
  EdgeClassification cls;
  cls.order = g.order();
  cls.edges = g.edges();
  cls.status.assign(cls.edges.size(), EdgeStatus::optional);
  cls.reference_matching = std::move(m);
  return cls;
}

void require_perfect(const EdgeClassification& cls) {
  if (!cls.reference_matching.is_perfect()) {
    throw Error(ErrorCode::no_perfect_matching, "reference matching is not perfect");
  }
}

}  // namespace

std::string_view to_string(EdgeStatus s) {
  switch (s) {
    case EdgeStatus::mandatory: return "mandatory";
    case EdgeStatus::optional: return "optional";
    case EdgeStatus::forbidden: return "forbidden";
  }
  return "unknown";
}

EdgeStatus EdgeClassification::status_of(const Edge& e) const {
  const auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) {
    throw Error(ErrorCode::invalid_argument, "edge " + format_edge(e) + " not in graph");
  }
  return status[static_cast<std::size_t>(it - edges.begin())];
}

EdgeList EdgeClassification::with_status(EdgeStatus s) const {
  EdgeList out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (status[i] == s) out.push_back(edges[i]);
  }
  return out;
}

bool EdgeClassification::any(EdgeStatus s) const {
  return std::find(status.begin(), status.end(), s) != status.end();
}

MatchingDigraph build_matching_digraph(const Graph& g, const Bipartition& b, const Matching& m) {
  MatchingDigraph d;
  const int n = g.order();
  d.node_of.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (d.node_of[v] != -1) continue;
    MatchingDigraph::Node node;
    (b.in_a(v) ? node.a : node.b) = v;
    d.node_of[v] = static_cast<int>(d.nodes.size());
    if (const Vertex w = m.partner(v); w != kUnmatched) {
      (b.in_a(w) ? node.a : node.b) = w;
      d.node_of[w] = d.node_of[v];
    }
    d.nodes.push_back(node);
  }
  d.out.resize(d.nodes.size());
  for (const Edge& e : g.edges()) {
    if (m.contains(e)) continue;
    const Vertex a = b.in_a(e.u) ? e.u : e.v;
    const Vertex w = b.in_a(e.u) ? e.v : e.u;
    d.out[d.node_of[a]].push_back(static_cast<int>(d.arcs.size()));
    d.arcs.push_back({d.node_of[a], d.node_of[w], e});
  }
  for (auto& list : d.out) {
    std::stable_sort(list.begin(), list.end(),
                     [&](int x, int y) { return d.arcs[x].to < d.arcs[y].to; });
  }
  tarjan(d);
  return d;
}

EdgeClassification classify_edges(const Graph& g, const Bipartition& b) {
  EdgeClassification cls = empty_classification(g, maximum_matching(g, b));
  const MatchingDigraph d = build_matching_digraph(g, b, cls.reference_matching);
  const std::vector<bool> from_free_a = reach(d, true);
  const std::vector<bool> to_free_b = reach(d, false);
  for (std::size_t i = 0; i < cls.edges.size(); ++i) {
    const Edge& e = cls.edges[i];
    if (cls.reference_matching.contains(e)) {
      const int x = d.node_of[e.u];
      const bool on_cycle = d.scc_size[d.scc_id[x]] > 1;
      cls.status[i] = on_cycle || from_free_a[x] || to_free_b[x] ? EdgeStatus::optional
                                                                 : EdgeStatus::mandatory;
      continue;
    }
    const Vertex a = b.in_a(e.u) ? e.u : e.v;
    const Vertex w = b.in_a(e.u) ? e.v : e.u;
    const int x = d.node_of[a];
    const int y = d.node_of[w];
    const bool allowed = d.scc_id[x] == d.scc_id[y] || from_free_a[x] || to_free_b[y];
    cls.status[i] = allowed ? EdgeStatus::optional : EdgeStatus::forbidden;
  }
  return cls;
}

EdgeClassification classify_edges_by_rematching(const Graph& g, const Bipartition& b) {
  EdgeClassification cls = empty_classification(g, maximum_matching(g, b));
  const Matching& m = cls.reference_matching;
  const int mu = m.size();
  for (std::size_t i = 0; i < cls.edges.size(); ++i) {
    const Edge& e = cls.edges[i];
    if (m.contains(e)) {
      Matching trial = m;
      trial.remove(e);
      MatchingMask mask;
      mask.removed_edges.push_back(e);
      cls.status[i] = augment_once(g, b, trial, mask) ? EdgeStatus::optional : EdgeStatus::mandatory;
      continue;
    }
    // Forcing e into a matching is the same as deleting both endpoints.
    Matching trial = m;
    trial.unmatch(e.u);
    trial.unmatch(e.v);
    MatchingMask mask;
    mask.removed_vertices.assign(g.order(), false);
    mask.removed_vertices[e.u] = true;
    mask.removed_vertices[e.v] = true;
    while (augment_once(g, b, trial, mask)) {
    }
    cls.status[i] = trial.size() < mu - 1 ? EdgeStatus::forbidden : EdgeStatus::optional;
  }
  return cls;
}

std::vector<int> allowed_degree(const EdgeClassification& cls) {
  require_perfect(cls);
  std::vector<int> degree(cls.order, 0);
  for (std::size_t i = 0; i < cls.edges.size(); ++i) {
    if (cls.status[i] == EdgeStatus::forbidden) continue;
    ++degree[cls.edges[i].u];
    ++degree[cls.edges[i].v];
  }
  return degree;
}

std::optional<std::vector<Vertex>> alternating_cycle_through(
    const Graph& g, const Bipartition& b, const EdgeClassification& cls, Vertex v) {
  require_perfect(cls);
  if (v < 0 || v >= g.order()) {
    throw Error(ErrorCode::vertex_out_of_range, "vertex " + std::to_string(v));
  }
  const MatchingDigraph d = build_matching_digraph(g, b, cls.reference_matching);
  const int start = d.node_of[v];
  const int component = d.scc_id[start];
  if (d.scc_size[component] == 1) return std::nullopt;

  // Depth-first search inside the strong component until an arc closes back
  // onto the start node.
  std::vector<bool> visited(d.nodes.size(), false);
  std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
  std::vector<int> path_arcs;
  visited[start] = true;
  bool closed = false;
  while (!stack.empty() && !closed) {
    auto& [x, pos] = stack.back();
    if (pos == d.out[x].size()) {
      stack.pop_back();
      if (!path_arcs.empty()) path_arcs.pop_back();
      continue;
    }
    const int arc_id = d.out[x][pos++];
    const int y = d.arcs[arc_id].to;
    if (d.scc_id[y] != component) continue;
    if (y == start) {
      path_arcs.push_back(arc_id);
      closed = true;
    } else if (!visited[y]) {
      visited[y] = true;
      path_arcs.push_back(arc_id);
      stack.emplace_back(y, 0);
    }
  }
  if (!closed) return std::nullopt;

  // Forward order: a0, b1, a1, b2, ..., ak, b0.
  std::vector<Vertex> forward;
  for (int arc_id : path_arcs) {
    const auto& arc = d.arcs[arc_id];
    forward.push_back(d.nodes[arc.from].a);
    forward.push_back(d.nodes[arc.to].b);
  }
  std::vector<Vertex> cycle;
  if (b.in_a(v)) {
    cycle.push_back(forward.front());
    cycle.insert(cycle.end(), forward.rbegin(), forward.rend() - 1);
  } else {
    cycle.push_back(forward.back());
    cycle.insert(cycle.end(), forward.begin(), forward.end() - 1);
  }
  return cycle;
}

CycleFamily symmetric_difference_cycles(const Graph& g, const Matching& m1, const Matching& m2) {
  if (!is_matching_of(g, m1) || !is_matching_of(g, m2)) {
    throw Error(ErrorCode::invalid_argument, "matching does not belong to the graph");
  }
  if (!m1.is_perfect() || !m2.is_perfect()) {
    throw Error(ErrorCode::not_perfect, "both matchings must be perfect");
  }
  CycleFamily family;
  std::vector<bool> visited(g.order(), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (visited[v]) continue;
    if (m1.partner(v) == m2.partner(v)) {
      visited[v] = visited[m1.partner(v)] = true;
      family.shared_edges.emplace_back(v, m1.partner(v));
      continue;
    }
    std::vector<Vertex> cycle;
    Vertex cur = v;
    bool use_first = true;
    do {
      visited[cur] = true;
      cycle.push_back(cur);
      cur = use_first ? m1.partner(cur) : m2.partner(cur);
      use_first = !use_first;
    } while (cur != v);
    family.cycles.push_back(std::move(cycle));
  }
  return family;
}

}  // namespace alphastab
