#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "alphastab/graph.hpp"
#include "alphastab/matching.hpp"

namespace alphastab {

enum class EdgeStatus {
  mandatory,  // in every maximum matching
  optional,   // in some but not all
  forbidden,  // in none
};

std::string_view to_string(EdgeStatus s);

struct EdgeClassification {
  int order = 0;
  EdgeList edges;  // same order as Graph::edges()
  std::vector<EdgeStatus> status;
  Matching reference_matching;

  EdgeStatus status_of(const Edge& e) const;
  EdgeList with_status(EdgeStatus s) const;
  bool any(EdgeStatus s) const;
};

// Contracted alternating structure of a maximum matching. One node per
// matched pair or unmatched vertex; one arc per non-matching edge, from the
// node holding its A endpoint to the node holding its B endpoint.
struct MatchingDigraph {
  struct Node {
    Vertex a = kUnmatched;  // A-side vertex, if any
    Vertex b = kUnmatched;  // B-side vertex, if any
  };
  struct Arc {
    int from = 0;
    int to = 0;
    Edge edge;
  };

  std::vector<Node> nodes;
  std::vector<int> node_of;  // vertex -> node id
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;  // arc ids, ascending head node id
  std::vector<int> scc_id;
  std::vector<int> scc_size;

  int scc_count() const { return static_cast<int>(scc_size.size()); }
  bool strongly_connected() const { return scc_count() <= 1; }
};

MatchingDigraph build_matching_digraph(const Graph& g, const Bipartition& b, const Matching& m);

// Reachability from free A vertices / co-reachability to free B vertices in
// the digraph settles allowed edges when the matching is not perfect; strong
// components settle them otherwise.
EdgeClassification classify_edges(const Graph& g, const Bipartition& b);

// Same contract, computed edge by edge from matching numbers of G - e and
// G - u - v with warm-started augmentation.
EdgeClassification classify_edges_by_rematching(const Graph& g, const Bipartition& b);

// Incident non-forbidden edges per vertex. Throws no_perfect_matching.
std::vector<int> allowed_degree(const EdgeClassification& cls);

// Simple cycle through v alternating with respect to the reference perfect
// matching; starts at v followed by its partner. Throws no_perfect_matching.
std::optional<std::vector<Vertex>> alternating_cycle_through(
    const Graph& g, const Bipartition& b, const EdgeClassification& cls, Vertex v);

struct CycleFamily {
  std::vector<std::vector<Vertex>> cycles;
  EdgeList shared_edges;
};

// Components of m1 xor m2. Throws not_perfect.
CycleFamily symmetric_difference_cycles(const Graph& g, const Matching& m1, const Matching& m2);

}  // namespace alphastab
