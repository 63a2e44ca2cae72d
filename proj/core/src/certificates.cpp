#include "alphastab/certificates.hpp"

#include <algorithm>
#include <set>

#include "alphastab/oracle.hpp"

namespace alphastab {

namespace {

bool kuhn_augment(const Graph& g, const std::vector<bool>& skip, Vertex a,
                  std::vector<Vertex>& mate, std::vector<bool>& visited) {
  for (Vertex b : g.neighbors(a)) {
    if (skip[b] || visited[b]) continue;
    visited[b] = true;
    if (mate[b] == kUnmatched || kuhn_augment(g, skip, mate[b], mate, visited)) {
      mate[b] = a;
      return true;
    }
  }
  return false;
}

// Matching number of g with `skip` vertices deleted. g bipartite.
int kuhn_mu(const Graph& g, const std::vector<bool>& skip) {
  const Bipartition b = require_bipartition(g);
  std::vector<Vertex> mate(g.order(), kUnmatched);
  int mu = 0;
  for (Vertex a : b.class_a) {
    if (skip[a]) continue;
    std::vector<bool> visited(g.order(), false);
    if (kuhn_augment(g, skip, a, mate, visited)) ++mu;
  }
  return mu;
}

int kuhn_mu(const Graph& g) { return kuhn_mu(g, std::vector<bool>(g.order(), false)); }

bool in_range(const Graph& g, Vertex v) { return v >= 0 && v < g.order(); }

CheckFailure fail(std::string what) { return CheckFailure(std::move(what)); }

CheckFailure check_stable_system(const Graph& g, const VertexSet& s, int alpha) {
  for (Vertex v : s) {
    if (!in_range(g, v)) return fail("vertex " + std::to_string(v) + " out of range");
  }
  if (!is_stable_set(g, s)) return fail("set " + format_vertices(s) + " is not stable");
  if (static_cast<int>(s.size()) != alpha) {
    return fail("set " + format_vertices(s) + " has size " + std::to_string(s.size()) +
                ", alpha is " + std::to_string(alpha));
  }
  return std::nullopt;
}

bool closed_walk(const Graph& g, const std::vector<Vertex>& walk) {
  if (walk.size() < 3) return false;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const Vertex x = walk[i];
    const Vertex y = walk[(i + 1) % walk.size()];
    if (!in_range(g, x) || !in_range(g, y) || !g.has_edge(x, y)) return false;
  }
  return true;
}

}  // namespace

int reference_matching_number(const Graph& g) { return kuhn_mu(g); }

CheckFailure check_alpha_minus(const Graph& g, const AlphaMinusResult& r) {
  switch (r.method) {
    case Method::matching: {
      if (r.stable) {
        if (r.witness_edge) return fail("stable verdict carries a witness edge");
        return std::nullopt;
      }
      if (!r.witness_edge) return fail("missing mandatory edge");
      const Edge e = *r.witness_edge;
      if (!in_range(g, e.u) || !in_range(g, e.v) || !g.has_edge(e.u, e.v)) {
        return fail("witness " + format_edge(e) + " is not an edge");
      }
      if (kuhn_mu(g.without_edge(e)) != kuhn_mu(g) - 1) {
        return fail("deleting " + format_edge(e) + " does not lower the matching number");
      }
      return std::nullopt;
    }
    case Method::chordal: {
      const VertexSet& s = r.stability_system;
      if (!is_stable_set(g, s)) return fail("stability system is not stable");
      if (g.order() <= OracleBudget{}.max_vertices_exact_alpha) {
        if (auto f = check_stable_system(g, s, oracle_alpha(g))) return f;
      }
      const DominationCheck dom = is_n_dominating(g, s, 2);
      if (r.stable) {
        if (!dom.dominating) return fail("stability system is not 2-dominating");
        return std::nullopt;
      }
      if (!r.under_dominated) return fail("missing under-dominated vertex");
      const Vertex v = *r.under_dominated;
      if (!in_range(g, v) || std::binary_search(s.begin(), s.end(), v)) {
        return fail("under-dominated vertex is not outside the system");
      }
      const auto& nbrs = g.neighbors(v);
      const auto inside = std::count_if(nbrs.begin(), nbrs.end(), [&](Vertex w) {
        return std::binary_search(s.begin(), s.end(), w);
      });
      if (inside >= 2) return fail("vertex " + std::to_string(v) + " is 2-dominated");
      return std::nullopt;
    }
    case Method::oracle: {
      if (r.stable) return std::nullopt;
      if (!r.witness_edge || !g.has_edge(r.witness_edge->u, r.witness_edge->v)) {
        return fail("missing or invalid witness edge");
      }
      if (oracle_alpha(g.without_edge(*r.witness_edge)) == oracle_alpha(g)) {
        return fail("deleting the witness edge keeps alpha");
      }
      return std::nullopt;
    }
  }
  return fail("unknown method");
}

CheckFailure check_alpha_plus(const Graph& g, const AlphaPlusResult& r) {
  if (r.stable) {
    if (r.method != Method::matching) return std::nullopt;
    if (!r.matching) return fail("missing matching");
    const Matching& m = *r.matching;
    if (m.order() != g.order() || !is_matching_of(g, m)) return fail("not a matching of the graph");
    int exposed = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (m.is_matched(v)) continue;
      ++exposed;
      if (g.degree(v) > 0) return fail("exposed vertex " + std::to_string(v) + " is not isolated");
    }
    if (exposed > 1) return fail("more than one exposed vertex");
    return std::nullopt;
  }
  if (!r.core_pair) return fail("missing core pair");
  const auto [x, y] = *r.core_pair;
  if (!in_range(g, x) || !in_range(g, y) || x == y) return fail("core pair out of range");
  if (g.has_edge(x, y)) return fail("core pair is adjacent");
  if (r.method == Method::oracle) {
    if (oracle_alpha(g.with_edge(Edge(x, y))) >= oracle_alpha(g)) {
      return fail("joining the core pair keeps alpha");
    }
    return std::nullopt;
  }
  // v lies in every maximum stable set iff deleting it keeps mu.
  const int mu = kuhn_mu(g);
  for (Vertex v : {x, y}) {
    std::vector<bool> skip(g.order(), false);
    skip[v] = true;
    if (kuhn_mu(g, skip) != mu) {
      return fail("vertex " + std::to_string(v) + " is missed by some maximum stable set");
    }
  }
  return std::nullopt;
}

CheckFailure check_ear_decomposition(const Graph& g, const EarDecomposition& dec) {
  const auto parts = bipartition(g).parts;
  if (!parts) return fail("graph is not bipartite");
  const Bipartition& b = *parts;
  std::vector<bool> present(g.order(), false);
  std::set<Edge> edges;
  auto add_edge = [&](Vertex x, Vertex y) -> CheckFailure {
    if (!in_range(g, x) || !in_range(g, y) || x == y || !g.has_edge(x, y)) {
      return fail("pair " + std::to_string(x) + "-" + std::to_string(y) + " is not an edge");
    }
    if (!edges.insert(Edge(x, y)).second) return fail("edge " + format_edge(Edge(x, y)) + " reused");
    return std::nullopt;
  };
  if (auto f = add_edge(dec.base.u, dec.base.v)) return f;
  present[dec.base.u] = present[dec.base.v] = true;
  for (std::size_t i = 0; i < dec.ears.size(); ++i) {
    const Ear& ear = dec.ears[i];
    const std::string where = "ear " + std::to_string(i) + ": ";
    if (!in_range(g, ear.first) || !in_range(g, ear.last) || !present[ear.first] ||
        !present[ear.last]) {
      return fail(where + "endpoint not yet built");
    }
    if (b.in_a(ear.first) == b.in_a(ear.last)) return fail(where + "endpoints share a color class");
    if (ear.internal.size() % 2 != 0) return fail(where + "odd number of internal vertices");
    Vertex prev = ear.first;
    for (Vertex v : ear.internal) {
      if (!in_range(g, v) || present[v]) return fail(where + "internal vertex is not new");
      if (auto f = add_edge(prev, v)) return fail(where + *f);
      present[v] = true;
      prev = v;
    }
    if (auto f = add_edge(prev, ear.last)) return fail(where + *f);
  }
  if (!std::all_of(present.begin(), present.end(), [](bool p) { return p; })) {
    return fail("some vertex is never built");
  }
  if (static_cast<int>(edges.size()) != g.size()) return fail("some edge is never built");
  return std::nullopt;
}

CheckFailure check_bistable(const Graph& g, const BistableResult& r) {
  const auto parts = bipartition(g).parts;
  if (r.bistable) {
    if (!parts) return fail("bistable verdict on a non-bipartite graph");
    if (r.degenerate_k2 != (g.order() == 2)) return fail("degenerate K2 flag mismatch");
    if (!r.perfect_matching || r.perfect_matching->order() != g.order() ||
        !is_matching_of(g, *r.perfect_matching) || !r.perfect_matching->is_perfect()) {
      return fail("missing or invalid perfect matching");
    }
    if (!r.ears) return fail("missing ear decomposition");
    return check_ear_decomposition(g, *r.ears);
  }
  switch (r.failure) {
    case BistableFailure::none: return fail("negative verdict without a reason");
    case BistableFailure::empty_graph:
      return g.order() == 0 ? CheckFailure{} : fail("graph is not empty");
    case BistableFailure::not_bipartite:
      if (r.odd_cycle.size() % 2 == 0 || !closed_walk(g, r.odd_cycle)) {
        return fail("odd cycle witness is not an odd closed walk");
      }
      return std::nullopt;
    default: break;
  }
  if (!parts) return fail("graph is not bipartite");
  if (!r.other_system) return fail("missing stability system witness");
  const VertexSet& s = *r.other_system;
  if (auto f = check_stable_system(g, s, g.order() - kuhn_mu(g))) return f;
  const std::size_t smaller = std::min(parts->class_a.size(), parts->class_b.size());
  if (s == parts->class_a || s == parts->class_b) {
    if (s.size() <= smaller) return fail("witness is a color class");
  }
  if (r.failure == BistableFailure::forbidden_edge) {
    if (!r.forbidden_edge) return fail("missing forbidden edge");
    const Edge e = *r.forbidden_edge;
    if (!g.has_edge(e.u, e.v)) return fail("forbidden edge is not an edge");
    std::vector<bool> skip(g.order(), false);
    skip[e.u] = skip[e.v] = true;
    if (2 * (kuhn_mu(g, skip) + 1) == g.order()) {
      return fail("edge " + format_edge(e) + " lies in a perfect matching");
    }
  }
  return std::nullopt;
}

CheckFailure check_alternating_cycle(const Graph& g, const Matching& m, Vertex v,
                                     const std::vector<Vertex>& cycle) {
  if (cycle.size() < 4 || cycle.size() % 2 != 0) return fail("cycle length is not even >= 4");
  if (cycle.front() != v) return fail("cycle does not start at its vertex");
  if (std::set<Vertex>(cycle.begin(), cycle.end()).size() != cycle.size()) {
    return fail("cycle repeats a vertex");
  }
  if (!closed_walk(g, cycle)) return fail("cycle uses a non-edge");
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Edge e(cycle[i], cycle[(i + 1) % cycle.size()]);
    if (m.contains(e) != (i % 2 == 0)) return fail("cycle does not alternate at " + format_edge(e));
  }
  return std::nullopt;
}

CheckFailure check_decomposition(const Graph& g, const BistableDecomposition& dec) {
  std::vector<int> hits(g.order(), 0);
  for (const VertexSet& piece : dec.pieces) {
    if (piece.size() < 4) return fail("piece " + format_vertices(piece) + " has fewer than 4 vertices");
    for (Vertex v : piece) {
      if (!in_range(g, v)) return fail("vertex out of range");
      ++hits[v];
    }
    const InducedSubgraph sub = induced_subgraph(g, piece);
    const BistableResult r = is_bistable(sub.graph);
    if (!r.bistable) return fail("piece " + format_vertices(piece) + " is not bistable");
    if (auto f = check_bistable(sub.graph, r)) return fail("piece certificate: " + *f);
  }
  for (const Edge& e : dec.k2_pieces) {
    if (!in_range(g, e.u) || !in_range(g, e.v) || !g.has_edge(e.u, e.v)) {
      return fail("K2 piece " + format_edge(e) + " is not an edge");
    }
    ++hits[e.u];
    ++hits[e.v];
  }
  if (dec.singletons.size() > 1) return fail("more than one singleton");
  for (Vertex v : dec.singletons) {
    if (!in_range(g, v) || g.degree(v) != 0) return fail("singleton is not isolated");
    ++hits[v];
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (hits[v] != 1) return fail("vertex " + std::to_string(v) + " covered " + std::to_string(hits[v]) + " times");
  }
  return std::nullopt;
}

CheckFailure check_report(const Graph& g, const StabilityReport& report) {
  if (report.order != g.order() || report.size != g.size()) return fail("order or size mismatch");
  if (auto f = check_alpha_minus(g, report.alpha_minus)) return fail("alpha-minus: " + *f);
  if (auto f = check_alpha_plus(g, report.alpha_plus)) return fail("alpha-plus: " + *f);
  if (auto f = check_bistable(g, report.bistable)) return fail("bistable: " + *f);
  if (report.alpha_stable != (report.alpha_minus.stable && report.alpha_plus.stable)) {
    return fail("alpha-stable verdict is not the conjunction");
  }
  if (report.graph_class == GraphClass::bipartite) {
    const int mu = kuhn_mu(g);
    if (report.mu != mu) return fail("matching number mismatch");
    if (report.alpha != g.order() - mu) return fail("stability number mismatch");
    if (!report.reference_matching || !is_matching_of(g, *report.reference_matching) ||
        report.reference_matching->size() != mu) {
      return fail("reference matching is not maximum");
    }
    if (static_cast<int>(report.alternating_cycles.size()) != g.order()) {
      return fail("alternating cycle table has the wrong length");
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto& cycle = report.alternating_cycles[v];
      if (cycle.empty()) continue;
      if (auto f = check_alternating_cycle(g, *report.reference_matching, v, cycle)) {
        return fail("cycle through " + std::to_string(v) + ": " + *f);
      }
    }
  }
  std::vector<int> hits(g.order(), 0);
  for (const ComponentReport& c : report.per_component) {
    for (Vertex v : c.vertices) {
      if (!in_range(g, v)) return fail("component vertex out of range");
      ++hits[v];
    }
  }
  if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
    return fail("components do not partition the vertices");
  }
  return std::nullopt;
}

}  // namespace alphastab
