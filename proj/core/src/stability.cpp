#include "alphastab/stability.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "alphastab/chordal.hpp"
#include "alphastab/oracle.hpp"

namespace alphastab {

namespace {

[[noreturn]] void unsupported(const Graph& g) {
  throw Error(ErrorCode::unsupported_class,
              "graph is neither bipartite nor chordal and has " + std::to_string(g.order()) +
                  " vertices (exhaustive limit " + std::to_string(kOracleRouteLimit) + ")");
}

VertexSet to_original(const InducedSubgraph& sub, const VertexSet& local) {
  VertexSet out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(sub.to_original[v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> exposed_vertices(const Matching& m) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < m.order(); ++v) {
    if (!m.is_matched(v)) out.push_back(v);
  }
  return out;
}

// Ears grown out of the base pair along the matching digraph, then leftover
// edges as chords. g must be connected with a perfect matching and no
// forbidden edge.
EarDecomposition build_ears(const Graph& g, const Bipartition& b, const Matching& m) {
  const MatchingDigraph dg = build_matching_digraph(g, b, m);
  const int nodes = static_cast<int>(dg.nodes.size());
  EarDecomposition dec;
  dec.base = m.edges().front();
  std::vector<bool> in_s(nodes, false);
  in_s[dg.node_of[dec.base.u]] = true;
  int covered = 1;
  std::vector<bool> used_edge(g.size(), false);
  used_edge[g.edge_index(dec.base)] = true;
  while (covered < nodes) {
    std::vector<int> via_arc(nodes, -1);
    std::deque<int> queue;
    for (int s = 0; s < nodes; ++s) {
      if (!in_s[s]) continue;
      for (int arc : dg.out[s]) {
        const int head = dg.arcs[arc].to;
        if (in_s[head] || via_arc[head] != -1) continue;
        via_arc[head] = arc;
        queue.push_back(head);
      }
    }
    int closing_arc = -1;
    while (!queue.empty() && closing_arc == -1) {
      const int x = queue.front();
      queue.pop_front();
      for (int arc : dg.out[x]) {
        const int head = dg.arcs[arc].to;
        if (in_s[head]) {
          closing_arc = arc;
          break;
        }
        if (via_arc[head] != -1) continue;
        via_arc[head] = arc;
        queue.push_back(head);
      }
    }
    if (closing_arc == -1) {
      throw Error(ErrorCode::not_bistable, "matching digraph is not strongly connected");
    }
    std::vector<int> path_arcs{closing_arc};
    for (int node = dg.arcs[closing_arc].from; !in_s[node]; node = dg.arcs[via_arc[node]].from) {
      path_arcs.push_back(via_arc[node]);
    }
    std::reverse(path_arcs.begin(), path_arcs.end());
    Ear ear;
    const Edge& opening = dg.arcs[path_arcs.front()].edge;
    ear.first = b.in_a(opening.u) ? opening.u : opening.v;
    const Edge& closing = dg.arcs[closing_arc].edge;
    ear.last = b.in_a(closing.u) ? closing.v : closing.u;
    for (std::size_t i = 0; i + 1 < path_arcs.size(); ++i) {
      const int node = dg.arcs[path_arcs[i]].to;
      ear.internal.push_back(dg.nodes[node].b);
      ear.internal.push_back(dg.nodes[node].a);
      in_s[node] = true;
      ++covered;
      used_edge[g.edge_index(Edge(dg.nodes[node].a, dg.nodes[node].b))] = true;
    }
    for (int arc : path_arcs) used_edge[g.edge_index(dg.arcs[arc].edge)] = true;
    dec.ears.push_back(std::move(ear));
  }
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (used_edge[i]) continue;
    const Edge& e = g.edges()[i];
    const Vertex a = b.in_a(e.u) ? e.u : e.v;
    dec.ears.push_back(Ear{a, {}, e.u == a ? e.v : e.u});
  }
  return dec;
}

// Maximum stable set of G - u - v in original ids.
VertexSet stable_set_avoiding(const Graph& g, Vertex u, Vertex v) {
  const std::vector<Vertex> removed{std::min(u, v), std::max(u, v)};
  const InducedSubgraph sub = remove_vertices(g, removed);
  const Bipartition b = require_bipartition(sub.graph);
  return to_original(sub, maximum_stable_set(sub.graph, b).members);
}

ComponentReport component_report(const Graph& g, const VertexSet& vertices) {
  const InducedSubgraph sub = induced_subgraph(g, vertices);
  ComponentReport out;
  out.vertices = vertices;
  const AlphaMinusResult minus = is_alpha_minus(sub.graph);
  const AlphaPlusResult plus = is_alpha_plus(sub.graph);
  out.alpha_minus = minus.stable;
  out.alpha_plus = plus.stable;
  out.alpha_stable = minus.stable && plus.stable;
  out.bistable = is_bistable(sub.graph).bistable;
  if (auto parts = bipartition(sub.graph).parts) {
    out.mu = matching_number(sub.graph, *parts);
    out.alpha = sub.graph.order() - out.mu;
  } else {
    out.alpha = oracle_alpha(sub.graph);
    out.mu = oracle_mu(sub.graph);
  }
  return out;
}

}  // namespace

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::bipartite: return "bipartite";
    case GraphClass::chordal: return "chordal";
    case GraphClass::other: return "other";
  }
  return "unknown";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::matching: return "matching";
    case Method::chordal: return "chordal";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

std::string_view to_string(BistableFailure f) {
  switch (f) {
    case BistableFailure::none: return "none";
    case BistableFailure::empty_graph: return "empty_graph";
    case BistableFailure::not_bipartite: return "not_bipartite";
    case BistableFailure::no_perfect_matching: return "no_perfect_matching";
    case BistableFailure::disconnected: return "disconnected";
    case BistableFailure::forbidden_edge: return "forbidden_edge";
  }
  return "unknown";
}

GraphClass classify_graph(const Graph& g) {
  if (bipartition(g).bipartite()) return GraphClass::bipartite;
  if (is_chordal(g).chordal()) return GraphClass::chordal;
  return GraphClass::other;
}

AlphaMinusResult is_alpha_minus(const Graph& g) {
  AlphaMinusResult out;
  if (const auto parts = bipartition(g).parts) {
    out.method = Method::matching;
    // Mandatory edges are the matching core; the classifier finds them in
    // linear time.
    const EdgeList core = classify_edges(g, *parts).with_status(EdgeStatus::mandatory);
    out.stable = core.empty();
    if (!core.empty()) out.witness_edge = *std::min_element(core.begin(), core.end());
    return out;
  }
  if (is_chordal(g).chordal()) {
    const ChordalAlphaMinus c = chordal_alpha_minus(g);
    out.method = Method::chordal;
    out.stable = c.stable;
    out.stability_system = c.stability_system;
    out.under_dominated = c.under_dominated;
    return out;
  }
  if (g.order() > kOracleRouteLimit) unsupported(g);
  out.method = Method::oracle;
  out.witness_edge = find_alpha_minus_violation(g);
  out.stable = !out.witness_edge.has_value();
  return out;
}

AlphaPlusResult is_alpha_plus(const Graph& g) {
  AlphaPlusResult out;
  const auto parts = bipartition(g).parts;
  if (!parts) {
    if (g.order() > kOracleRouteLimit) unsupported(g);
    out.method = Method::oracle;
    if (auto e = find_alpha_plus_violation(g)) {
      out.core_pair = VertexPair{e->u, e->v};
      const auto components = connected_components(g);
      for (std::size_t i = 0; i < components.size(); ++i) {
        if (std::binary_search(components[i].begin(), components[i].end(), e->v)) {
          out.failing_component = static_cast<int>(i);
        }
      }
    } else {
      out.stable = true;
    }
    return out;
  }
  out.method = Method::matching;
  Matching m = maximum_matching(g, *parts);
  const std::vector<Vertex> exposed = exposed_vertices(m);
  const bool exposed_isolated =
      std::all_of(exposed.begin(), exposed.end(), [&](Vertex v) { return g.degree(v) == 0; });
  if (exposed.size() <= 1 && exposed_isolated) {
    out.stable = true;
    out.matching = std::move(m);
    return out;
  }
  const VertexSet core = stable_core(g, *parts);
  const auto components = connected_components(g);
  std::vector<Vertex> isolated;
  for (std::size_t i = 0; i < components.size(); ++i) {
    VertexSet in_core;
    std::set_intersection(components[i].begin(), components[i].end(), core.begin(), core.end(),
                          std::back_inserter(in_core));
    if (components[i].size() >= 2 && in_core.size() >= 2) {
      out.core_pair = VertexPair{in_core[0], in_core[1]};
      out.failing_component = static_cast<int>(i);
      return out;
    }
    if (components[i].size() == 1) {
      isolated.push_back(components[i].front());
      if (isolated.size() == 2) {
        out.core_pair = VertexPair{isolated[0], isolated[1]};
        out.failing_component = static_cast<int>(i);
        return out;
      }
    }
  }
  throw Error(ErrorCode::invalid_argument, "alpha-plus check found no core pair");
}

StabilityReport is_alpha_stable(const Graph& g) {
  StabilityReport report;
  report.graph_class = classify_graph(g);
  report.order = g.order();
  report.size = g.size();
  report.alpha_minus = is_alpha_minus(g);
  report.alpha_plus = is_alpha_plus(g);
  report.alpha_stable = report.alpha_minus.stable && report.alpha_plus.stable;
  report.bistable = is_bistable(g);
  if (const auto parts = bipartition(g).parts) {
    const Matching m = maximum_matching(g, *parts);
    report.mu = m.size();
    report.alpha = g.order() - report.mu;
    report.reference_matching = m;
    report.alternating_cycles.assign(g.order(), {});
    for (const VertexSet& comp : connected_components(g)) {
      if (comp.size() < 2) continue;
      const InducedSubgraph sub = induced_subgraph(g, comp);
      const Bipartition sb = require_bipartition(sub.graph);
      // Classify against the restriction of the global matching so cycles
      // alternate with respect to reference_matching.
      EdgeClassification cls = classify_edges(sub.graph, sb);
      Matching local(sub.graph.order());
      for (Vertex v = 0; v < sub.graph.order(); ++v) {
        const Vertex p = m.partner(sub.to_original[v]);
        if (p == kUnmatched || sub.to_original[v] > p) continue;
        const auto it = std::lower_bound(comp.begin(), comp.end(), p);
        local.add(Edge(v, static_cast<Vertex>(it - comp.begin())));
      }
      if (!local.is_perfect()) continue;
      cls.reference_matching = local;
      for (Vertex v = 0; v < sub.graph.order(); ++v) {
        if (auto cycle = alternating_cycle_through(sub.graph, sb, cls, v)) {
          std::vector<Vertex>& out = report.alternating_cycles[sub.to_original[v]];
          for (Vertex x : *cycle) out.push_back(sub.to_original[x]);
        }
      }
    }
  } else if (report.graph_class == GraphClass::chordal && !report.alpha_minus.stability_system.empty()) {
    report.alpha = static_cast<int>(report.alpha_minus.stability_system.size());
    report.mu = oracle_mu(g);
  } else {
    report.alpha = oracle_alpha(g);
    report.mu = oracle_mu(g);
  }
  const auto components = connected_components(g);
  if (components.size() == 1) {
    ComponentReport whole;
    whole.vertices = components.front();
    whole.alpha = report.alpha;
    whole.mu = report.mu;
    whole.alpha_minus = report.alpha_minus.stable;
    whole.alpha_plus = report.alpha_plus.stable;
    whole.alpha_stable = report.alpha_stable;
    whole.bistable = report.bistable.bistable;
    report.per_component.push_back(std::move(whole));
  } else {
    for (const VertexSet& comp : components) report.per_component.push_back(component_report(g, comp));
  }
  return report;
}

BistableResult is_bistable(const Graph& g) {
  BistableResult out;
  const BipartitionResult bip = bipartition(g);
  if (!bip.bipartite()) {
    out.failure = BistableFailure::not_bipartite;
    out.odd_cycle = bip.odd_cycle;
    return out;
  }
  if (g.order() == 0) {
    out.failure = BistableFailure::empty_graph;
    return out;
  }
  const Bipartition& b = *bip.parts;
  const Matching m = maximum_matching(g, b);
  if (!m.is_perfect()) {
    out.failure = BistableFailure::no_perfect_matching;
    out.other_system = maximum_stable_set(g, b).members;
    return out;
  }
  const auto components = connected_components(g);
  if (components.size() > 1) {
    out.failure = BistableFailure::disconnected;
    // Swap the colors on the second component.
    VertexSet s;
    for (Vertex v = 0; v < g.order(); ++v) {
      const bool flipped = std::binary_search(components[1].begin(), components[1].end(), v);
      if (b.in_a(v) != flipped) s.push_back(v);
    }
    out.other_system = std::move(s);
    return out;
  }
  const EdgeClassification cls = classify_edges(g, b);
  const EdgeList forbidden = cls.with_status(EdgeStatus::forbidden);
  if (!forbidden.empty()) {
    out.failure = BistableFailure::forbidden_edge;
    out.forbidden_edge = forbidden.front();
    out.other_system = stable_set_avoiding(g, forbidden.front().u, forbidden.front().v);
    return out;
  }
  out.bistable = true;
  out.degenerate_k2 = g.order() == 2;
  out.perfect_matching = m;
  out.ears = build_ears(g, b, m);
  return out;
}

BistableDecomposition bistable_decomposition(const Graph& g) {
  const Bipartition b = require_bipartition(g);
  if (!is_alpha_plus(g).stable) {
    throw Error(ErrorCode::not_alpha_plus,
                "a component of order at least 2 lacks a perfect matching, or there are two "
                "isolated vertices");
  }
  const EdgeClassification cls = classify_edges(g, b);
  BistableDecomposition out;
  out.k2_pieces = cls.with_status(EdgeStatus::mandatory);
  const Graph optional_part(g.order(), cls.with_status(EdgeStatus::optional));
  for (const VertexSet& comp : connected_components(optional_part)) {
    if (comp.size() >= 2) {
      out.pieces.push_back(comp);
    } else if (g.degree(comp.front()) == 0) {
      out.singletons.push_back(comp.front());
    }
  }
  return out;
}

EarDecomposition ear_decomposition(const Graph& g) {
  BistableResult r = is_bistable(g);
  if (!r.bistable) {
    throw Error(ErrorCode::not_bistable, "graph is not bistable (" +
                                             std::string(to_string(r.failure)) + ")");
  }
  return std::move(*r.ears);
}

int EarDecomposition::vertex_count() const {
  int n = 2;
  for (const Ear& ear : ears) n += static_cast<int>(ear.internal.size());
  return n;
}

int EarDecomposition::edge_count() const {
  int m = 1;
  for (const Ear& ear : ears) m += static_cast<int>(ear.internal.size()) + 1;
  return m;
}

EdgeList ear_edges(const EarDecomposition& dec) {
  EdgeList edges{dec.base};
  for (const Ear& ear : dec.ears) {
    Vertex prev = ear.first;
    for (Vertex v : ear.internal) {
      edges.emplace_back(prev, v);
      prev = v;
    }
    edges.emplace_back(prev, ear.last);
  }
  return edges;
}

Graph reconstruct(const EarDecomposition& dec, int n) { return Graph(n, ear_edges(dec)); }

InducedSubgraph ear_prefix(const EarDecomposition& dec, int n, int ears_used) {
  EarDecomposition prefix{dec.base, {}};
  prefix.ears.assign(dec.ears.begin(), dec.ears.begin() + ears_used);
  VertexSet vertices{dec.base.u, dec.base.v};
  for (const Ear& ear : prefix.ears) {
    vertices.insert(vertices.end(), ear.internal.begin(), ear.internal.end());
  }
  std::sort(vertices.begin(), vertices.end());
  return induced_subgraph(reconstruct(prefix, n), vertices);
}

UniqueSystemResult unique_stability_system(const Graph& g, const Bipartition& b) {
  UniqueSystemResult out;
  const VertexSet core = stable_core(g, b);
  const StableSet s1 = maximum_stable_set(g, b);
  if (core.size() == s1.members.size()) {
    out.system = core;
    return out;
  }
  VertexSet outside;
  std::set_difference(s1.members.begin(), s1.members.end(), core.begin(), core.end(),
                      std::back_inserter(outside));
  const std::vector<Vertex> removed{outside.front()};
  const InducedSubgraph sub = remove_vertices(g, removed);
  const Bipartition sb = require_bipartition(sub.graph);
  VertexSet s2 = to_original(sub, maximum_stable_set(sub.graph, sb).members);
  auto pair = std::minmax(s1.members, s2);
  out.witnesses = std::pair<VertexSet, VertexSet>(pair.first, pair.second);
  return out;
}

bool strong_unique_independence(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::not_connected, "graph is not connected");
  const auto parts = bipartition(g).parts;
  if (!parts) return false;
  if (!is_alpha_minus(g).stable) return false;
  const UniqueSystemResult unique = unique_stability_system(g, *parts);
  return unique.unique() && (*unique.system == parts->class_a || *unique.system == parts->class_b);
}

}  // namespace alphastab
