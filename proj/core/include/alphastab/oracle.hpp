#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "alphastab/graph.hpp"
#include "alphastab/matching.hpp"

namespace alphastab {

// Exponential-time ground truth. Inputs beyond the budget are refused with
// budget_exceeded rather than answered approximately.
struct OracleBudget {
  int max_vertices_exact_alpha = 24;
  int max_vertices_enumeration = 14;
  long long max_graphs = 1'000'000;
};

// Branch and bound on the maximum-degree vertex, bounded by a greedy clique
// cover.
int oracle_alpha(const Graph& g, const OracleBudget& budget = {});

// Matching number of an arbitrary (not necessarily bipartite) graph.
int oracle_mu(const Graph& g, const OracleBudget& budget = {});

// All stable sets of size alpha, sorted lexicographically.
std::vector<VertexSet> enumerate_maximum_stable_sets(const Graph& g,
                                                     const OracleBudget& budget = {});

// All matchings of size mu via include/exclude recursion on edges.
std::vector<Matching> enumerate_maximum_matchings(const Graph& g, const OracleBudget& budget = {});

// First edge e with alpha(G - e) != alpha(G).
std::optional<Edge> find_alpha_minus_violation(const Graph& g, const OracleBudget& budget = {});
// First non-edge e with alpha(G + e) != alpha(G).
std::optional<Edge> find_alpha_plus_violation(const Graph& g, const OracleBudget& budget = {});

bool def_alpha_minus(const Graph& g, const OracleBudget& budget = {});
bool def_alpha_plus(const Graph& g, const OracleBudget& budget = {});
bool def_alpha_stable(const Graph& g, const OracleBudget& budget = {});

}  // namespace alphastab
