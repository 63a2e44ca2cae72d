#pragma once

#include <optional>
#include <vector>

#include "alphastab/graph.hpp"
#include "alphastab/matching.hpp"

namespace alphastab {

// Perfect elimination order: every vertex's later neighbors form a clique.
struct EliminationOrder {
  std::vector<Vertex> order;
};

struct ChordalityResult {
  std::optional<EliminationOrder> peo;
  // Chordless cycle of length >= 4 when the graph is not chordal.
  std::vector<Vertex> chordless_cycle;

  bool chordal() const { return peo.has_value(); }
};

// Lexicographic breadth-first search, reversed.
std::vector<Vertex> lex_bfs_order(const Graph& g);

bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& peo);

ChordalityResult is_chordal(const Graph& g);

// Greedy along the elimination order. Throws invalid_peo.
StableSet chordal_maximum_stable_set(const Graph& g, const EliminationOrder& peo);

struct ChordalAlphaMinus {
  bool stable = false;
  VertexSet stability_system;
  std::optional<Vertex> under_dominated;
};

// alpha^- stable iff the greedy stability system is 2-dominating, in which
// case it is the unique one. Throws not_chordal.
ChordalAlphaMinus chordal_alpha_minus(const Graph& g);

// All pendant vertices in one color class. Throws not_a_tree, order_too_small.
bool tree_strong_unique_independence(const Graph& g);

struct TreeAlphaPlus {
  bool stable = false;
  Matching matching;  // perfect when stable
  bool is_path_2n = false;
};

// Repeatedly matches a pendant vertex to its neighbor. Throws not_a_tree.
TreeAlphaPlus tree_alpha_plus(const Graph& g);

}  // namespace alphastab
