#include "alphastab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "alphastab/certificates.hpp"
#include "alphastab/chordal.hpp"
#include "alphastab/edge_classifier.hpp"
#include "alphastab/enumeration.hpp"
#include "alphastab/generators.hpp"
#include "alphastab/matching.hpp"
#include "alphastab/oracle.hpp"
#include "alphastab/stability.hpp"

namespace alphastab {

namespace {

using Fail = std::optional<std::string>;

// Every condition in the list must agree.
Fail agree(const std::vector<std::pair<std::string, bool>>& conditions) {
  const bool first = conditions.front().second;
  if (std::all_of(conditions.begin(), conditions.end(),
                  [&](const auto& c) { return c.second == first; })) {
    return std::nullopt;
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    out << (i ? " " : "") << conditions[i].first << "=" << (conditions[i].second ? "yes" : "no");
  }
  return out.str();
}

Fail require(bool ok, const std::string& what) { return ok ? Fail{} : Fail{what}; }

// ---- Exhaustive facts, all computed without the matching engine ----------

VertexSet intersect_all(const std::vector<VertexSet>& sets) {
  if (sets.empty()) return {};
  VertexSet common = sets.front();
  for (const VertexSet& s : sets) {
    VertexSet next;
    std::set_intersection(common.begin(), common.end(), s.begin(), s.end(),
                          std::back_inserter(next));
    common = std::move(next);
  }
  return common;
}

EdgeList common_edges(const std::vector<Matching>& matchings) {
  if (matchings.empty()) return {};
  EdgeList common = matchings.front().edges();
  for (const Matching& m : matchings) {
    EdgeList next;
    for (const Edge& e : common) {
      if (m.contains(e)) next.push_back(e);
    }
    common = std::move(next);
  }
  return common;
}

bool has_pm(const Graph& g) { return 2 * oracle_mu(g) == g.order(); }

bool all_two_dominating(const Graph& g, const std::vector<VertexSet>& systems) {
  return std::all_of(systems.begin(), systems.end(),
                     [&](const VertexSet& s) { return is_n_dominating(g, s, 2).dominating; });
}

bool two_systems_partition(const Graph& g, const std::vector<VertexSet>& systems) {
  for (std::size_t i = 0; i < systems.size(); ++i) {
    for (std::size_t j = i + 1; j < systems.size(); ++j) {
      VertexSet both;
      std::set_union(systems[i].begin(), systems[i].end(), systems[j].begin(), systems[j].end(),
                     std::back_inserter(both));
      if (static_cast<int>(both.size()) == g.order() &&
          systems[i].size() + systems[j].size() == both.size()) {
        return true;
      }
    }
  }
  return false;
}

// mu unchanged by deleting any edge.
bool mu_edge_deletion_stable(const Graph& g) {
  const int mu = oracle_mu(g);
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return oracle_mu(g.without_edge(e)) == mu; });
}

bool mu_addition_stable(const Graph& g, const EdgeList& additions) {
  const int mu = oracle_mu(g);
  return std::all_of(additions.begin(), additions.end(),
                     [&](const Edge& e) { return oracle_mu(g.with_edge(e)) == mu; });
}

bool exactly_color_classes(const std::vector<VertexSet>& systems, const Bipartition& b) {
  if (systems.size() != 2) return false;
  std::vector<VertexSet> classes{b.class_a, b.class_b};
  std::sort(classes.begin(), classes.end());
  return systems == classes;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  VertexSet out;
  for (Vertex v : x) out.insert(out.end(), g.neighbors(v).begin(), g.neighbors(v).end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// |N(X)| > |X| for every proper non-empty subset X of `side`.
bool hall_surplus(const Graph& g, const VertexSet& side) {
  const int k = static_cast<int>(side.size());
  for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
    VertexSet x;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) x.push_back(side[i]);
    }
    if (neighborhood(g, x).size() <= x.size()) return false;
  }
  return true;
}

// Minimum vertex covers by subset enumeration.
std::vector<VertexSet> minimum_vertex_covers(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> best;
  std::size_t best_size = static_cast<std::size_t>(n) + 1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    VertexSet cover;
    for (Vertex v = 0; v < n; ++v) {
      if (mask & (1u << v)) cover.push_back(v);
    }
    if (cover.size() > best_size || !is_vertex_cover(g, cover)) continue;
    if (cover.size() < best_size) {
      best.clear();
      best_size = cover.size();
    }
    best.push_back(std::move(cover));
  }
  std::sort(best.begin(), best.end());
  return best;
}

Graph minus_pair(const Graph& g, Vertex a, Vertex b) {
  const std::vector<Vertex> removed{std::min(a, b), std::max(a, b)};
  return remove_vertices(g, removed).graph;
}

// Calls visit on spanning trees of a connected graph until it returns true.
bool any_spanning_tree(const Graph& g, const std::function<bool(const Graph&)>& visit) {
  const int n = g.order();
  const EdgeList& edges = g.edges();
  if (n <= 1) return visit(g);
  EdgeList chosen;
  std::function<bool(std::size_t, std::vector<int>)> rec = [&](std::size_t index,
                                                              std::vector<int> root) -> bool {
    if (static_cast<int>(chosen.size()) == n - 1) return visit(Graph(n, chosen));
    if (index == edges.size()) return false;
    if (static_cast<int>(chosen.size() + (edges.size() - index)) < n - 1) return false;
    auto find = [&](int x) {
      while (root[x] != x) x = root[x];
      return x;
    };
    const int ru = find(edges[index].u);
    const int rv = find(edges[index].v);
    if (ru != rv) {
      std::vector<int> merged = root;
      merged[ru] = rv;
      chosen.push_back(edges[index]);
      if (rec(index + 1, std::move(merged))) return true;
      chosen.pop_back();
    }
    return rec(index + 1, std::move(root));
  };
  std::vector<int> root(n);
  for (int i = 0; i < n; ++i) root[i] = i;
  return rec(0, std::move(root));
}

// Every vertex has degree exactly 2 in some spanning subgraph.
bool has_two_factor(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<int> degree(n, 0);
  const EdgeList& edges = g.edges();
  std::vector<int> remaining(n, 0);
  for (const Edge& e : edges) {
    ++remaining[e.u];
    ++remaining[e.v];
  }
  std::function<bool(std::size_t)> rec = [&](std::size_t index) -> bool {
    if (index == edges.size()) {
      return std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; });
    }
    const Edge& e = edges[index];
    --remaining[e.u];
    --remaining[e.v];
    bool found = false;
    if (degree[e.u] < 2 && degree[e.v] < 2) {
      ++degree[e.u];
      ++degree[e.v];
      if (degree[e.u] + remaining[e.u] >= 2 && degree[e.v] + remaining[e.v] >= 2) found = rec(index + 1);
      --degree[e.u];
      --degree[e.v];
    }
    if (!found && degree[e.u] + remaining[e.u] >= 2 && degree[e.v] + remaining[e.v] >= 2) {
      found = rec(index + 1);
    }
    ++remaining[e.u];
    ++remaining[e.v];
    return found;
  };
  return rec(0);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Vertex w : g.neighbors(queue[i])) {
      if (dist[w] == -1) {
        dist[w] = dist[queue[i]] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// parity 0: all pendant distances even; parity 1: all odd.
bool pendant_distances_have_parity(const Graph& g, int parity) {
  const VertexSet pendants = pendant_vertices(g);
  for (std::size_t i = 0; i < pendants.size(); ++i) {
    const std::vector<int> dist = bfs_distances(g, pendants[i]);
    for (std::size_t j = i + 1; j < pendants.size(); ++j) {
      if (dist[pendants[j]] % 2 != parity) return false;
    }
  }
  return true;
}

bool is_path_graph(const Graph& g) {
  return is_tree(g) && std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
           return g.degree(e.u) <= 2 && g.degree(e.v) <= 2;
         });
}

bool unique_system_complement_stable(const Graph& g) {
  const std::vector<VertexSet> systems = enumerate_maximum_stable_sets(g);
  if (systems.size() != 1) return false;
  VertexSet rest;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!std::binary_search(systems[0].begin(), systems[0].end(), v)) rest.push_back(v);
  }
  return is_stable_set(g, rest);
}

// Stable set larger than the other color class collecting every pendant.
bool pendants_in_larger_class(const Graph& g, const Bipartition& b) {
  if (b.class_a.size() == b.class_b.size()) return false;
  const VertexSet& larger = b.class_a.size() > b.class_b.size() ? b.class_a : b.class_b;
  const VertexSet pendants = pendant_vertices(g);
  return std::all_of(pendants.begin(), pendants.end(),
                     [&](Vertex v) { return std::binary_search(larger.begin(), larger.end(), v); });
}

std::vector<VertexSet> component_sets(const Graph& g) { return connected_components(g); }

// Component-wise rule: every component passes and at most one has stable
// core of size exactly one.
bool component_rule(const Graph& g, bool (*passes)(const Graph&), bool core_clause) {
  int singleton_cores = 0;
  for (const VertexSet& comp : component_sets(g)) {
    const Graph h = induced_subgraph(g, comp).graph;
    if (!passes(h)) return false;
    if (core_clause && intersect_all(enumerate_maximum_stable_sets(h)).size() == 1) {
      ++singleton_cores;
    }
  }
  return singleton_cores <= 1;
}

bool def_minus(const Graph& g) { return def_alpha_minus(g); }
bool def_plus(const Graph& g) { return def_alpha_plus(g); }
bool def_stable(const Graph& g) { return def_alpha_stable(g); }

Fail classification_matches_oracle(const Graph& g, const EdgeClassification& cls) {
  const std::vector<Matching> all = enumerate_maximum_matchings(g);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    const auto count = std::count_if(all.begin(), all.end(), [&](const Matching& m) { return m.contains(e); });
    const EdgeStatus expected = count == 0 ? EdgeStatus::forbidden
                                : count == static_cast<long>(all.size()) ? EdgeStatus::mandatory
                                                                         : EdgeStatus::optional;
    if (cls.status[i] != expected) {
      return "edge " + format_edge(e) + " classified " + std::string(to_string(cls.status[i])) +
             ", enumeration says " + std::string(to_string(expected));
    }
  }
  return std::nullopt;
}

// Every way of joining the ends of a new k-vertex path to one or two
// same-class vertices of h each (one end may stay free) that keeps the result
// bipartite.
std::vector<Graph> path_joins(const Graph& h, int k) {
  const Bipartition b = require_bipartition(h);
  const int n = h.order();
  std::vector<std::vector<Vertex>> host_sets{{}};
  for (Vertex x = 0; x < n; ++x) host_sets.push_back({x});
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (b.in_a(x) == b.in_a(y)) host_sets.push_back({x, y});
    }
  }
  std::vector<Graph> out;
  for (const auto& first : host_sets) {
    for (const auto& last : host_sets) {
      if (first.empty() && last.empty()) continue;
      std::vector<PathAttachment> attachments;
      for (Vertex x : first) attachments.push_back({0, x});
      for (Vertex x : last) attachments.push_back({k - 1, x});
      Graph g = detail::attach_even_path_unchecked(h, k, attachments);
      if (bipartition(g).bipartite()) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Claim> build_claims() {
  std::vector<Claim> claims;
  auto add = [&](Claim c) { claims.push_back(std::move(c)); };

  add({"konig-identity", "alpha + mu = n on bipartite graphs", Domain::connected_bipartite, 1, 8,
       true, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         const Bipartition b = require_bipartition(g);
         const int mu = matching_number(g, b);
         const int a = oracle_alpha(g);
         const StableSet s = maximum_stable_set(g, b);
         if (a + mu != g.order()) {
           return "alpha " + std::to_string(a) + " + mu " + std::to_string(mu) + " != n";
         }
         return require(is_stable_set(g, s.members) && static_cast<int>(s.members.size()) == a,
                        "matching-derived stable set is not maximum");
       },
       {}});

  add({"konig-cover", "complement of the matching-derived stable set is a minimum cover",
       Domain::connected_bipartite, 1, 8, true, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         const Bipartition b = require_bipartition(g);
         const Matching m = maximum_matching(g, b);
         const VertexSet cover = konig_cover(g, b, m);
         if (!is_vertex_cover(g, cover)) return "not a vertex cover";
         return require(static_cast<int>(cover.size()) == m.size(), "cover size differs from mu");
       },
       {}});

  add({"alpha-minus-bipartite",
       "structural alpha-minus = definition = all systems 2-dominating = mu stable under edge "
       "deletion = empty intersection of maximum matchings",
       Domain::bipartite, 1, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         const auto systems = enumerate_maximum_stable_sets(g);
         return agree({{"structural", is_alpha_minus(g).stable},
                       {"definition", def_alpha_minus(g)},
                       {"systems-2-dominating", all_two_dominating(g, systems)},
                       {"mu-deletion-stable", mu_edge_deletion_stable(g)},
                       {"matching-intersection-empty",
                        common_edges(enumerate_maximum_matchings(g)).empty()}});
       },
       {}});

  add({"alpha-minus-domination", "definition = every stability system 2-dominating, any graph",
       Domain::all_graphs, 1, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         return agree({{"definition", def_alpha_minus(g)},
                       {"systems-2-dominating",
                        all_two_dominating(g, enumerate_maximum_stable_sets(g))}});
       },
       {}});

  add({"alpha-plus-core-pair", "definition = no vertex pair in every stability system, any graph",
       Domain::all_graphs, 1, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         return agree({{"definition", def_alpha_plus(g)},
                       {"core-at-most-one",
                        intersect_all(enumerate_maximum_stable_sets(g)).size() <= 1}});
       },
       {}});

  add({"alpha-plus-bipartite",
       "perfect matching = definition = structural = two systems partition V = empty core = mu "
       "stable under additions (all or cross) = alpha-plus spanning tree = bistable pieces",
       Domain::connected_bipartite, 2, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         const Bipartition b = require_bipartition(g);
         const auto systems = enumerate_maximum_stable_sets(g);
         const bool balanced = b.balanced();
         bool decomposes = true;
         try {
           const BistableDecomposition dec = bistable_decomposition(g);
           if (auto f = check_decomposition(g, dec)) return "decomposition: " + *f;
         } catch (const Error&) {
           decomposes = false;
         }
         return agree({{"perfect-matching", has_pm(g)},
                       {"definition", def_alpha_plus(g)},
                       {"structural", is_alpha_plus(g).stable},
                       {"two-systems-partition", two_systems_partition(g, systems)},
                       {"core-empty", intersect_all(systems).empty()},
                       {"complement-additions", balanced && mu_addition_stable(g, complement_edges(g))},
                       {"cross-additions",
                        balanced && mu_addition_stable(g, bipartite_complement_edges(g, b))},
                       {"spanning-tree", any_spanning_tree(g, [](const Graph& t) { return def_alpha_plus(t); })},
                       {"bistable-pieces", decomposes}});
       },
       {}});

  add({"alpha-minus-components", "alpha-minus iff every component is", Domain::all_graphs, 1, 8,
       false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         return agree({{"definition", def_alpha_minus(g)},
                       {"components", component_rule(g, def_minus, false)}});
       },
       {}});

  add({"alpha-plus-components",
       "alpha-plus iff every component is and at most one has a one-vertex core",
       Domain::all_graphs, 1, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         return agree({{"definition", def_alpha_plus(g)},
                       {"components", component_rule(g, def_plus, true)},
                       {"structural", g.order() > kOracleRouteLimit || is_alpha_plus(g).stable}});
       },
       {}});

  add({"alpha-stable-components",
       "alpha-stable iff every component is and at most one has a one-vertex core",
       Domain::all_graphs, 1, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         return agree({{"definition", def_alpha_stable(g)},
                       {"components", component_rule(g, def_stable, true)},
                       {"structural", is_alpha_stable(g).alpha_stable}});
       },
       {}});

  add({"stable-core-not-one",
       "connected bipartite graphs with 2+ vertices never have a one-vertex core; core = "
       "intersection of systems",
       Domain::connected_bipartite, 2, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         const VertexSet core = stable_core(g, require_bipartition(g));
         if (core.size() == 1) return "core " + format_vertices(core);
         return require(core == intersect_all(enumerate_maximum_stable_sets(g)),
                        "core " + format_vertices(core) + " differs from enumeration");
       },
       {}});

  add({"core-one-odd-cycle", "a connected graph with 2+ vertices and a one-vertex core is not bipartite",
       Domain::connected_graphs, 2, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         if (intersect_all(enumerate_maximum_stable_sets(g)).size() != 1) return std::nullopt;
         return require(!bipartition(g).bipartite(), "bipartite with one-vertex core");
       },
       {}});

  add({"matching-core", "matching core = intersection of all maximum matchings",
       Domain::bipartite, 1, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         EdgeList core = matching_core(g, require_bipartition(g));
         std::sort(core.begin(), core.end());
         EdgeList expected = common_edges(enumerate_maximum_matchings(g));
         std::sort(expected.begin(), expected.end());
         return require(core == expected, "matching core differs from enumeration");
       },
       {}});

  add({"alpha-stable-bipartite",
       "structural alpha-stable = definition = perfect matchings with empty intersection = mu "
       "stable under deletions and additions = empty cores = allowed degree >= 2 = alternating "
       "cycle through every vertex = bistable pieces of order 4+",
       Domain::connected_bipartite, 4, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         const Bipartition b = require_bipartition(g);
         const bool pm = has_pm(g);
         const auto matchings = enumerate_maximum_matchings(g);
         const auto systems = enumerate_maximum_stable_sets(g);
         const bool balanced = b.balanced();
         const bool deletion = mu_edge_deletion_stable(g);
         bool degree_two = false;
         bool cycles = false;
         if (pm) {
           const EdgeClassification cls = classify_edges(g, b);
           const std::vector<int> deg = allowed_degree(cls);
           degree_two = std::all_of(deg.begin(), deg.end(), [](int d) { return d >= 2; });
           cycles = true;
           for (Vertex v = 0; v < g.order() && cycles; ++v) {
             const auto cycle = alternating_cycle_through(g, b, cls, v);
             if (!cycle) {
               cycles = false;
             } else if (auto f = check_alternating_cycle(g, cls.reference_matching, v, *cycle)) {
               return "cycle through " + std::to_string(v) + ": " + *f;
             }
           }
         }
         bool pieces = false;
         try {
           const BistableDecomposition dec = bistable_decomposition(g);
           if (auto f = check_decomposition(g, dec)) return "decomposition: " + *f;
           pieces = dec.k2_pieces.empty() && dec.singletons.empty();
         } catch (const Error&) {
         }
         return agree({{"structural", is_alpha_stable(g).alpha_stable},
                        {"definition", def_alpha_stable(g)},
                        {"pm-intersection-empty", pm && common_edges(matchings).empty()},
                        {"mu-complement", balanced && deletion && mu_addition_stable(g, complement_edges(g))},
                        {"mu-cross", balanced && deletion &&
                                         mu_addition_stable(g, bipartite_complement_edges(g, b))},
                        {"cores-empty", intersect_all(systems).empty() && common_edges(matchings).empty()},
                        {"allowed-degree", degree_two},
                        {"alternating-cycles", cycles},
                        {"bistable-pieces", pieces}});
       },
       {}});

  add({"bistable-bipartite",
       "bistable = exactly the color classes as systems = only minimum covers are the classes = "
       "Hall surplus = balanced with surplus on A = G-a-b alpha-plus = G-a-b has a perfect "
       "matching = connected with every edge allowed = perfect matchings span a connected "
       "subgraph = ear decomposition",
       Domain::connected_bipartite, 4, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         const Bipartition b = require_bipartition(g);
         const int n = g.order();
         const auto systems = enumerate_maximum_stable_sets(g);
         std::vector<VertexSet> class_covers{b.class_a, b.class_b};
         std::sort(class_covers.begin(), class_covers.end());
         bool pairs_plus = true;
         bool pairs_pm = true;
         for (Vertex a : b.class_a) {
           for (Vertex v : b.class_b) {
             const Graph h = minus_pair(g, a, v);
             pairs_plus = pairs_plus && def_alpha_plus(h);
             pairs_pm = pairs_pm && 2 * oracle_mu(h) == h.order();
           }
         }
         const bool pm = has_pm(g);
         bool every_edge = false;
         bool elementary = false;
         if (pm) {
           const auto matchings = enumerate_maximum_matchings(g);
           EdgeList used;
           for (const Edge& e : g.edges()) {
             if (std::any_of(matchings.begin(), matchings.end(),
                             [&](const Matching& m) { return m.contains(e); })) {
               used.push_back(e);
             }
           }
           every_edge = is_connected(g) && used.size() == g.edges().size();
           elementary = is_connected(Graph(n, used));
         }
         bool ears = false;
         try {
           const EarDecomposition dec = ear_decomposition(g);
           if (auto f = check_ear_decomposition(g, dec)) return "ears: " + *f;
           if (static_cast<int>(dec.ears.size()) != g.size() - n + 1) return "wrong ear count";
           for (int i = 0; i <= static_cast<int>(dec.ears.size()); ++i) {
             if (!is_bistable(ear_prefix(dec, n, i).graph).bistable) {
               return "ear prefix " + std::to_string(i) + " is not bistable";
             }
           }
           ears = true;
         } catch (const Error&) {
         }
         return agree({{"structural", is_bistable(g).bistable},
                       {"two-systems", exactly_color_classes(systems, b)},
                       {"cover-irreducible", b.balanced() && minimum_vertex_covers(g) == class_covers},
                       {"hall-surplus", hall_surplus(g, b.class_a) && hall_surplus(g, b.class_b)},
                       {"balanced-surplus", b.balanced() && hall_surplus(g, b.class_a)},
                       {"pairs-alpha-plus", pairs_plus},
                       {"pairs-perfect-matching", pairs_pm},
                       {"every-edge-allowed", every_edge},
                       {"elementary", elementary},
                       {"ear-decomposition", ears}});
       },
       {}});

  add({"bistable-alpha-stable",
       "bistable graphs with 4+ vertices are alpha-stable, have perfect matchings and no edge in "
       "all of them",
       Domain::bipartite, 4, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         if (!is_bistable(g).bistable) return std::nullopt;
         if (!def_alpha_stable(g)) return "bistable but not alpha-stable";
         if (!has_pm(g)) return "bistable without perfect matching";
         return require(common_edges(enumerate_maximum_matchings(g)).empty(),
                        "an edge lies in every perfect matching");
       },
       {}});

  add({"two-cycle-bistable",
       "two vertex-disjoint cycles covering V plus cross edges: bistable iff both cross "
       "directions are used",
       Domain::custom, 8, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         // Instances: cycles on 0..3 and 4..7 with A = {0,2,4,6}.
         bool forward = false;
         bool backward = false;
         for (const Edge& e : g.edges()) {
           if (e.u < 4 && e.v >= 4) {
             (e.u % 2 == 0 ? forward : backward) = true;
           }
         }
         const auto parts = bipartition(g).parts;
         if (!parts) return "instance not bipartite";
         return agree({{"both-directions", forward && backward},
                       {"bistable", exactly_color_classes(enumerate_maximum_stable_sets(g), *parts)},
                       {"structural", is_bistable(g).bistable}});
       },
       [](int max_n) {
         std::vector<Graph> out;
         if (max_n < 8) return out;
         EdgeList cross;
         for (Vertex a : {0, 2}) {
           for (Vertex b : {5, 7}) cross.emplace_back(a, b);
         }
         for (Vertex a : {4, 6}) {
           for (Vertex b : {1, 3}) cross.emplace_back(a, b);
         }
         for (unsigned mask = 0; mask < (1u << cross.size()); ++mask) {
           EdgeList edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}};
           for (std::size_t i = 0; i < cross.size(); ++i) {
             if (mask & (1u << i)) edges.push_back(cross[i]);
           }
           Graph g(8, edges);
           if (is_connected(g)) out.push_back(std::move(g));
         }
         return out;
       }});

  add({"substitution-bistable",
       "replacing each matched template pair by a 4-cycle keeps bistability in both directions",
       Domain::connected_bipartite, 4, 6, false, false,
       [](const Graph& h, const ClaimContext&) -> Fail {
         const Bipartition b = require_bipartition(h);
         const Matching pairing = maximum_matching(h, b);
         if (!pairing.is_perfect()) return std::nullopt;
         const int p = h.order() / 2;
         const std::vector<Graph> pieces(p, even_cycle(4));
         const PortChooser highest = [](int, bool, const VertexSet& c) { return c.back(); };
         for (const PortChooser& choose : {PortChooser(lowest_port), highest}) {
           const Graph g = detail::substitute_unchecked(h, pairing, pieces, choose);
           const auto gb = bipartition(g).parts;
           const bool template_bistable = exactly_color_classes(enumerate_maximum_stable_sets(h), b);
           const bool result_bistable = gb && exactly_color_classes(enumerate_maximum_stable_sets(g), *gb);
           if (auto f = agree({{"template", template_bistable}, {"result", result_bistable}})) return f;
         }
         return std::nullopt;
       },
       {}});

  add({"path-join-bistable",
       "joining a path to a bistable graph keeps bistability iff the path has even order and "
       "both ends are attached",
       Domain::connected_bipartite, 2, 6, false, false,
       [](const Graph& h, const ClaimContext&) -> Fail {
         if (!is_bistable(h).bistable) return std::nullopt;
         for (int k = 2; k <= 5; ++k) {
           for (const Graph& g : path_joins(h, k)) {
             const Vertex first = h.order();
             const Vertex last = h.order() + k - 1;
             auto attached = [&](Vertex end) {
               return std::any_of(g.neighbors(end).begin(), g.neighbors(end).end(),
                                  [&](Vertex w) { return w < h.order(); });
             };
             const bool expected = k % 2 == 0 && attached(first) && attached(last);
             const auto parts = require_bipartition(g);
             const bool actual = exactly_color_classes(enumerate_maximum_stable_sets(g), parts);
             if (expected != actual) {
               return "k=" + std::to_string(k) + " joined graph " + write_graph(g, {}) +
                      (actual ? " is" : " is not") + " bistable";
             }
           }
         }
         return std::nullopt;
       },
       {}});

  add({"path-join-alpha-stable",
       "joining a path of order 3+ by its ends to a connected alpha-stable bipartite graph is "
       "alpha-stable iff the order is even and every system of the host meets a neighbor of an end",
       Domain::connected_bipartite, 2, 6, false, false,
       [](const Graph& h, const ClaimContext&) -> Fail {
         if (!def_alpha_stable(h)) return std::nullopt;
         const auto systems = enumerate_maximum_stable_sets(h);
         for (int k = 3; k <= 5; ++k) {
           for (const Graph& g : path_joins(h, k)) {
             VertexSet hosts;
             for (Vertex end : {h.order(), h.order() + k - 1}) {
               for (Vertex w : g.neighbors(end)) {
                 if (w < h.order()) hosts.push_back(w);
               }
             }
             std::sort(hosts.begin(), hosts.end());
             const bool every_system_hit =
                 std::all_of(systems.begin(), systems.end(), [&](const VertexSet& s) {
                   return std::any_of(s.begin(), s.end(), [&](Vertex v) {
                     return std::binary_search(hosts.begin(), hosts.end(), v);
                   });
                 });
             const bool expected = k % 2 == 0 && every_system_hit;
             if (expected != def_alpha_stable(g)) {
               return "k=" + std::to_string(k) + " joined graph " + write_graph(g, {}) +
                      " alpha-stable=" + (expected ? "no" : "yes");
             }
           }
         }
         return std::nullopt;
       },
       {}});

  add({"union-preserves-stability",
       "connected unions of bipartite alpha-plus (alpha-stable) graphs are alpha-plus (alpha-stable)",
       Domain::connected_bipartite, 2, 6, false, false,
       [](const Graph& g1, const ClaimContext& ctx) -> Fail {
         const bool plus1 = def_alpha_plus(g1);
         const bool stable1 = plus1 && def_alpha_minus(g1);
         if (!plus1) return std::nullopt;
         for (int m = 2; g1.order() + m <= ctx.max_n; ++m) {
           for (const Graph& g2 : connected_bipartite_graphs(m)) {
             if (!def_alpha_plus(g2)) continue;
             const bool stable2 = def_alpha_minus(g2);
             for (Vertex u = 0; u < g1.order(); ++u) {
               for (Vertex w = 0; w < m; ++w) {
                 const Construction c = union_connect({g1, g2}, {Edge(u, g1.order() + w)});
                 if (!def_alpha_plus(c.graph)) return "union " + write_graph(c.graph, {}) + " not alpha-plus";
                 if (stable1 && stable2 && !def_alpha_stable(c.graph)) {
                   return "union " + write_graph(c.graph, {}) + " not alpha-stable";
                 }
               }
             }
           }
         }
         return std::nullopt;
       },
       {}});

  add({"alpha-stable-halves",
       "for an alpha-stable graph and a system S meeting both classes, G[(S n A) u (B - S)] is "
       "alpha-stable",
       Domain::connected_bipartite, 4, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         if (!def_alpha_stable(g)) return std::nullopt;
         const Bipartition b = require_bipartition(g);
         for (const VertexSet& s : enumerate_maximum_stable_sets(g)) {
           VertexSet half;
           for (Vertex v = 0; v < g.order(); ++v) {
             const bool in_s = std::binary_search(s.begin(), s.end(), v);
             if (b.in_a(v) == in_s) half.push_back(v);
           }
           const bool meets_a = std::any_of(s.begin(), s.end(), [&](Vertex v) { return b.in_a(v); });
           const bool meets_b = std::any_of(s.begin(), s.end(), [&](Vertex v) { return !b.in_a(v); });
           if (!meets_a || !meets_b) continue;
           if (!def_alpha_stable(induced_subgraph(g, half).graph)) {
             return "half " + format_vertices(half) + " for system " + format_vertices(s);
           }
         }
         return std::nullopt;
       },
       {}});

  add({"two-matchings-cycles",
       "two disjoint perfect matchings iff a vertex partition into cycles; symmetric differences "
       "split into alternating cycles",
       Domain::bipartite, 1, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         const auto matchings = enumerate_maximum_matchings(g);
         const bool pm = !matchings.empty() && matchings.front().is_perfect();
         bool disjoint = false;
         if (pm) {
           for (std::size_t i = 0; i < matchings.size() && !disjoint; ++i) {
             for (std::size_t j = i + 1; j < matchings.size() && !disjoint; ++j) {
               disjoint = common_edges({matchings[i], matchings[j]}).empty();
             }
           }
           const std::size_t limit = std::min<std::size_t>(matchings.size(), 12);
           for (std::size_t i = 0; i < limit; ++i) {
             for (std::size_t j = 0; j < limit; ++j) {
               const CycleFamily fam = symmetric_difference_cycles(g, matchings[i], matchings[j]);
               std::vector<int> hits(g.order(), 0);
               for (const auto& cycle : fam.cycles) {
                 for (Vertex v : cycle) ++hits[v];
                 if (auto f = check_alternating_cycle(g, matchings[i], cycle.front(), cycle)) {
                   return "difference cycle: " + *f;
                 }
               }
               for (const Edge& e : fam.shared_edges) {
                 ++hits[e.u];
                 ++hits[e.v];
               }
               if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
                 return std::string("difference cycles do not partition V");
               }
             }
           }
         }
         return agree({{"two-disjoint-perfect-matchings", disjoint}, {"cycle-partition", has_two_factor(g)}});
       },
       {}});

  add({"elementary-digraph",
       "with a perfect matching: no forbidden edge iff the matching digraph is strongly connected",
       Domain::connected_bipartite, 2, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         const Bipartition b = require_bipartition(g);
         const Matching m = maximum_matching(g, b);
         if (!m.is_perfect()) return std::nullopt;
         return agree({{"no-forbidden", !classify_edges(g, b).any(EdgeStatus::forbidden)},
                       {"strongly-connected", build_matching_digraph(g, b, m).strongly_connected()}});
       },
       {}});

  add({"classify-differential",
       "digraph edge classification = per-edge rematching = enumeration of maximum matchings",
       Domain::bipartite, 1, 8, true, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         const Bipartition b = require_bipartition(g);
         const EdgeClassification fast = classify_edges(g, b);
         const EdgeClassification slow = classify_edges_by_rematching(g, b);
         if (fast.status != slow.status) {
           for (std::size_t i = 0; i < fast.status.size(); ++i) {
             if (fast.status[i] != slow.status[i]) {
               return "edge " + format_edge(g.edges()[i]) + ": digraph " +
                      std::string(to_string(fast.status[i])) + ", rematching " +
                      std::string(to_string(slow.status[i]));
             }
           }
         }
         EdgeList mandatory = fast.with_status(EdgeStatus::mandatory);
         EdgeList core = matching_core(g, b);
         std::sort(mandatory.begin(), mandatory.end());
         std::sort(core.begin(), core.end());
         if (mandatory != core) return "mandatory edges differ from matching core";
         if (g.order() > kMaxExhaustiveHarnessOrder) return std::nullopt;
         return classification_matches_oracle(g, fast);
       },
       {}});

  add({"spanning-tree-same-alpha",
       "the matching-built spanning tree keeps alpha; alpha-minus passes from it to the graph",
       Domain::connected_bipartite, 1, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         const Graph t = alpha_preserving_spanning_tree(g, require_bipartition(g));
         if (!is_tree(t)) return "not a tree";
         for (const Edge& e : t.edges()) {
           if (!g.has_edge(e)) return "tree edge " + format_edge(e) + " not in graph";
         }
         if (oracle_alpha(t) != oracle_alpha(g)) return "alpha changed";
         return require(!def_alpha_minus(t) || def_alpha_minus(g), "alpha-minus tree, graph not");
       },
       {}});

  add({"strong-unique-independence",
       "strong unique independence = alpha-minus bipartite with a class as unique system = "
       "bipartite with such a spanning tree = bipartite with an alpha-minus spanning tree whose "
       "pendants lie in the larger class",
       Domain::connected_graphs, 1, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         const bool structural = strong_unique_independence(g);
         const bool oracle = unique_system_complement_stable(g);
         const auto parts = bipartition(g).parts;
         bool tree_sui = false;
         bool tree_pendants = false;
         if (parts && g.order() >= 3) {
           tree_sui = any_spanning_tree(g, [](const Graph& t) { return tree_strong_unique_independence(t); });
           tree_pendants = any_spanning_tree(g, [](const Graph& t) {
             return def_alpha_minus(t) && pendants_in_larger_class(t, require_bipartition(t));
           });
         } else if (parts) {
           tree_sui = tree_pendants = oracle;
         }
         return agree({{"structural", structural},
                       {"unique-system-complement-stable", oracle},
                       {"spanning-tree", tree_sui},
                       {"spanning-tree-pendants", tree_pendants}});
       },
       {}});

  add({"unique-system-alpha-minus", "a unique stability system forces alpha-minus; pendants lie in it",
       Domain::all_graphs, 1, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         const auto systems = enumerate_maximum_stable_sets(g);
         for (Vertex v : pendant_vertices(g)) {
           const bool somewhere = std::any_of(systems.begin(), systems.end(), [&](const VertexSet& s) {
             return std::binary_search(s.begin(), s.end(), v);
           });
           if (!somewhere) return "pendant " + std::to_string(v) + " in no system";
           if (systems.size() == 1 && !std::binary_search(systems[0].begin(), systems[0].end(), v)) {
             return "pendant " + std::to_string(v) + " outside the unique system";
           }
         }
         if (systems.size() != 1) return std::nullopt;
         return require(def_alpha_minus(g), "unique system but not alpha-minus");
       },
       {}});

  add({"chordal-alpha",
       "on chordal graphs: greedy alpha exact; greedy alpha-minus = definition = unique system = "
       "some system 2-dominating",
       Domain::chordal, 1, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         const auto chordal = is_chordal(g);
         if (!chordal.chordal()) return "not recognized as chordal";
         const StableSet s = chordal_maximum_stable_set(g, *chordal.peo);
         if (static_cast<int>(s.members.size()) != oracle_alpha(g) || !is_stable_set(g, s.members)) {
           return "greedy set " + format_vertices(s.members) + " is not maximum";
         }
         const auto systems = enumerate_maximum_stable_sets(g);
         const bool some_dominating = std::any_of(systems.begin(), systems.end(), [&](const VertexSet& x) {
           return is_n_dominating(g, x, 2).dominating;
         });
         return agree({{"greedy", chordal_alpha_minus(g).stable},
                       {"definition", def_alpha_minus(g)},
                       {"unique-system", systems.size() == 1},
                       {"some-system-2-dominating", some_dominating}});
       },
       {}});

  add({"chordal-not-alpha-stable", "no connected chordal graph with 2+ vertices is alpha-stable",
       Domain::connected_chordal, 2, 8, false, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         return require(!def_alpha_stable(g), "alpha-stable chordal graph");
       },
       {}});

  add({"tree-strong-unique",
       "trees of order 3+: strong unique independence = alpha-minus with pendants in the larger "
       "class = even pendant distances",
       Domain::trees, 3, 8, false, false,
       [](const Graph& t, const ClaimContext&) -> Fail {
         return agree({{"structural", tree_strong_unique_independence(t)},
                       {"unique-system-complement-stable", unique_system_complement_stable(t)},
                       {"alpha-minus-pendants",
                        def_alpha_minus(t) && pendants_in_larger_class(t, require_bipartition(t))},
                       {"even-pendant-distances", pendant_distances_have_parity(t, 0)}});
       },
       {}});

  add({"tree-alpha-plus",
       "trees of order 2+: alpha-plus = two systems partition V = perfect matching; even paths "
       "= alpha-plus paths = odd pendant distances",
       Domain::trees, 2, 8, false, false,
       [](const Graph& t, const ClaimContext&) -> Fail {
         const TreeAlphaPlus r = tree_alpha_plus(t);
         if (r.stable && (!is_matching_of(t, r.matching) || !r.matching.is_perfect())) {
           return "certificate is not a perfect matching";
         }
         if (auto f = agree({{"structural", r.stable},
                             {"definition", def_alpha_plus(t)},
                             {"two-systems-partition", two_systems_partition(t, enumerate_maximum_stable_sets(t))},
                             {"perfect-matching", has_pm(t)}})) {
           return f;
         }
         return agree({{"even-path-flag", r.is_path_2n},
                       {"alpha-plus-path", is_path_graph(t) && def_alpha_plus(t)},
                       {"odd-pendant-distances", pendant_distances_have_parity(t, 1)}});
       },
       {}});

  add({"certificates", "every certificate in the stability report re-verifies",
       Domain::all_graphs, 1, 8, true, false,
       [](const Graph& g, const ClaimContext&) -> Fail {
         const StabilityReport r = is_alpha_stable(g);
         if (auto f = check_report(g, r)) return f;
         if (r.alpha_plus.stable && r.graph_class == GraphClass::bipartite) {
           if (auto f = check_decomposition(g, bistable_decomposition(g))) return "decomposition: " + *f;
         }
         return std::nullopt;
       },
       {}});

  add({"selftest-negated", "deliberately false: no connected bipartite graph has a perfect matching",
       Domain::connected_bipartite, 2, 8, false, true,
       [](const Graph& g, const ClaimContext&) -> Fail {
         return require(!has_pm(g), "has a perfect matching");
       },
       {}});

  return claims;
}

std::vector<Graph> domain_graphs(const Claim& claim, int n) {
  switch (claim.domain) {
    case Domain::all_graphs: return all_graphs(n);
    case Domain::connected_graphs: return connected_graphs(n);
    case Domain::bipartite: return bipartite_graphs(n);
    case Domain::connected_bipartite: return connected_bipartite_graphs(n);
    case Domain::chordal: return chordal_graphs(n);
    case Domain::connected_chordal: {
      std::vector<Graph> out;
      for (const Graph& g : chordal_graphs(n)) {
        if (is_connected(g)) out.push_back(g);
      }
      return out;
    }
    case Domain::trees: return trees(n);
    case Domain::custom: return {};
  }
  return {};
}

struct Outcome {
  long long index = -1;
  Counterexample example;
};

// Runs check over instances with `threads` workers; keeps the failure with the
// smallest index so results do not depend on scheduling.
std::optional<Outcome> run_instances(const Claim& claim, const ClaimContext& ctx,
                                     const std::function<Graph(long long)>& instance,
                                     long long count, int threads) {
  std::atomic<long long> next{0};
  std::mutex guard;
  std::optional<Outcome> first;
  auto worker = [&] {
    while (true) {
      const long long i = next.fetch_add(1);
      if (i >= count) return;
      {
        std::lock_guard lock(guard);
        if (first && first->index < i) return;
      }
      const Graph g = instance(i);
      Fail f;
      try {
        f = claim.check(g, ctx);
      } catch (const std::exception& e) {
        f = std::string("exception: ") + e.what();
      }
      if (!f) continue;
      std::lock_guard lock(guard);
      if (!first || i < first->index) first = Outcome{i, {*f, write_graph(g, {})}};
    }
  };
  const int workers = std::max(1, threads);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return first;
}

}  // namespace

const std::vector<Claim>& registered_claims() {
  static const std::vector<Claim> claims = build_claims();
  return claims;
}

std::vector<std::string> claim_names(bool include_hidden) {
  std::vector<std::string> names;
  for (const Claim& c : registered_claims()) {
    if (include_hidden || !c.hidden) names.push_back(c.name);
  }
  return names;
}

bool HarnessReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.passed; });
}

Graph harness_sample(std::uint64_t seed, long long index, int max_n) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  const int low = max_n > kMaxExhaustiveHarnessOrder ? kMaxExhaustiveHarnessOrder + 1 : 2;
  const int n = std::uniform_int_distribution<int>(low, max_n)(rng);
  return sample_connected_bipartite(n, rng);
}

HarnessReport theorem_harness(const HarnessOptions& options) {
  if (options.max_n < 1 || options.max_n > kMaxSampledHarnessOrder ||
      (options.max_n > kMaxExhaustiveHarnessOrder && options.sample <= 0)) {
    throw Error(ErrorCode::invalid_argument,
                "max-n must be 1..8, or up to 14 with sampling; got " + std::to_string(options.max_n));
  }
  if (options.sample < 0) throw Error(ErrorCode::invalid_argument, "sample count must be >= 0");
  std::vector<const Claim*> selected;
  if (options.claims.empty()) {
    for (const Claim& c : registered_claims()) {
      if (!c.hidden) selected.push_back(&c);
    }
  } else {
    for (const std::string& name : options.claims) {
      const auto& all = registered_claims();
      const auto it = std::find_if(all.begin(), all.end(), [&](const Claim& c) { return c.name == name; });
      if (it == all.end()) throw Error(ErrorCode::invalid_argument, "unknown claim '" + name + "'");
      selected.push_back(&*it);
    }
  }
  HarnessReport report;
  report.seed = options.seed;
  report.max_n = options.max_n;
  report.sample = options.sample;
  const int exhaustive = std::min(options.max_n, kMaxExhaustiveHarnessOrder);
  const ClaimContext ctx{exhaustive};
  for (const Claim* claim : selected) {
    ClaimResult result;
    result.name = claim->name;
    std::vector<Graph> graphs;
    if (claim->domain == Domain::custom) {
      graphs = claim->instances(exhaustive);
    } else {
      for (int n = claim->min_n; n <= std::min(exhaustive, claim->max_n); ++n) {
        std::vector<Graph> batch = domain_graphs(*claim, n);
        graphs.insert(graphs.end(), std::make_move_iterator(batch.begin()),
                      std::make_move_iterator(batch.end()));
      }
    }
    auto failure = run_instances(
        *claim, ctx, [&](long long i) { return graphs[i]; },
        static_cast<long long>(graphs.size()), options.threads);
    result.instances = static_cast<long long>(graphs.size());
    if (!failure && claim->sampled && options.sample > 0) {
      failure = run_instances(
          *claim, ctx, [&](long long i) { return harness_sample(options.seed, i, options.max_n); },
          options.sample, options.threads);
      result.instances += options.sample;
    }
    if (failure) {
      result.passed = false;
      result.counterexample = failure->example;
    }
    report.claims.push_back(std::move(result));
  }
  return report;
}

}  // namespace alphastab
