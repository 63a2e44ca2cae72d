#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "alphastab/edge_classifier.hpp"
#include "alphastab/graph.hpp"
#include "alphastab/matching.hpp"

namespace alphastab {

// Graphs that are neither bipartite nor chordal are answered by exhaustive
// search up to this order and refused beyond it.
inline constexpr int kOracleRouteLimit = 16;

enum class GraphClass { bipartite, chordal, other };
std::string_view to_string(GraphClass c);

// Bipartite wins over chordal (forests are both).
GraphClass classify_graph(const Graph& g);

enum class Method { matching, chordal, oracle };
std::string_view to_string(Method m);

using VertexPair = std::pair<Vertex, Vertex>;

struct AlphaMinusResult {
  bool stable = false;
  Method method = Method::matching;
  // matching: an edge in every maximum matching; oracle: an edge whose
  // deletion raises alpha.
  std::optional<Edge> witness_edge;
  // chordal: the greedy stability system (unique when stable) and, when not
  // stable, a vertex outside it with fewer than two neighbors inside.
  VertexSet stability_system;
  std::optional<Vertex> under_dominated;

  friend bool operator==(const AlphaMinusResult&, const AlphaMinusResult&) = default;
};

struct AlphaPlusResult {
  bool stable = false;
  Method method = Method::matching;
  // matching, stable: a maximum matching leaving at most one vertex exposed,
  // and that vertex isolated.
  std::optional<Matching> matching;
  // Not stable: two non-adjacent vertices lying in every stability system,
  // so joining them lowers alpha.
  std::optional<VertexPair> core_pair;
  std::optional<int> failing_component;

  friend bool operator==(const AlphaPlusResult&, const AlphaPlusResult&) = default;
};

struct Ear {
  Vertex first = 0;
  std::vector<Vertex> internal;
  Vertex last = 0;

  friend bool operator==(const Ear&, const Ear&) = default;
};

struct EarDecomposition {
  Edge base;
  std::vector<Ear> ears;

  int vertex_count() const;
  int edge_count() const;
  friend bool operator==(const EarDecomposition&, const EarDecomposition&) = default;
};

enum class BistableFailure {
  none,
  empty_graph,
  not_bipartite,
  no_perfect_matching,
  disconnected,
  forbidden_edge,
};
std::string_view to_string(BistableFailure f);

struct BistableResult {
  bool bistable = false;
  bool degenerate_k2 = false;
  BistableFailure failure = BistableFailure::none;
  // Positive certificate.
  std::optional<Matching> perfect_matching;
  std::optional<EarDecomposition> ears;
  // Negative certificates. other_system is a maximum stable set that is
  // neither color class, or is larger than one of them.
  std::optional<VertexSet> other_system;
  std::optional<Edge> forbidden_edge;
  std::vector<Vertex> odd_cycle;

  friend bool operator==(const BistableResult&, const BistableResult&) = default;
};

struct ComponentReport {
  VertexSet vertices;
  int alpha = 0;
  int mu = 0;
  bool alpha_minus = false;
  bool alpha_plus = false;
  bool alpha_stable = false;
  bool bistable = false;

  friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

struct StabilityReport {
  GraphClass graph_class = GraphClass::bipartite;
  int order = 0;
  int size = 0;
  int alpha = 0;
  int mu = 0;
  AlphaMinusResult alpha_minus;
  AlphaPlusResult alpha_plus;
  bool alpha_stable = false;
  BistableResult bistable;
  // Bipartite only: cycles[v] alternates with respect to reference_matching
  // and passes through v. Empty when v's component has no perfect matching
  // or v lies in no alternating cycle.
  std::optional<Matching> reference_matching;
  std::vector<std::vector<Vertex>> alternating_cycles;
  std::vector<ComponentReport> per_component;

  bool konig_holds() const { return alpha + mu == order; }
  friend bool operator==(const StabilityReport&, const StabilityReport&) = default;
};

// Throws unsupported_class for non-bipartite, non-chordal graphs above the
// oracle route limit.
AlphaMinusResult is_alpha_minus(const Graph& g);
AlphaPlusResult is_alpha_plus(const Graph& g);
StabilityReport is_alpha_stable(const Graph& g);

BistableResult is_bistable(const Graph& g);

struct BistableDecomposition {
  std::vector<VertexSet> pieces;
  EdgeList k2_pieces;
  // At most one isolated vertex.
  VertexSet singletons;

  friend bool operator==(const BistableDecomposition&, const BistableDecomposition&) = default;
};

// Components of the optional-edge subgraph, plus mandatory edges as K2
// pieces. Throws not_bipartite, not_alpha_plus.
BistableDecomposition bistable_decomposition(const Graph& g);

// Base edge from the reference perfect matching; each ear leaves the current
// subgraph along the matching digraph and ends at its first return. Chords
// left over become ears without internal vertices. Throws not_bistable.
EarDecomposition ear_decomposition(const Graph& g);

// Edges of the base plus every ear, in ear order.
EdgeList ear_edges(const EarDecomposition& dec);
// Graph on dec.vertex_count() vertices.
Graph reconstruct(const EarDecomposition& dec, int n);
// Base plus the first `ears_used` ears, relabeled onto its own vertices.
InducedSubgraph ear_prefix(const EarDecomposition& dec, int n, int ears_used);

struct UniqueSystemResult {
  std::optional<VertexSet> system;
  // Two distinct stability systems when the system is not unique.
  std::optional<std::pair<VertexSet, VertexSet>> witnesses;

  bool unique() const { return system.has_value(); }
};

// Unique iff the stable core has alpha vertices.
UniqueSystemResult unique_stability_system(const Graph& g, const Bipartition& b);

// Bipartite, alpha-minus stable, and the unique stability system is a color
// class. Throws not_connected.
bool strong_unique_independence(const Graph& g);

}  // namespace alphastab
