#pragma once

#include <span>
#include <vector>

#include "alphastab/graph.hpp"

namespace alphastab {

inline constexpr Vertex kUnmatched = -1;

// Set of pairwise non-incident edges with a symmetric partner map.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int n) : partner_(static_cast<std::size_t>(n), kUnmatched) {}
  // Throws invalid_argument if two edges share an endpoint.
  Matching(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(partner_.size()); }
  int size() const noexcept { return size_; }
  Vertex partner(Vertex v) const { return partner_[v]; }
  bool is_matched(Vertex v) const { return partner_[v] != kUnmatched; }
  bool contains(const Edge& e) const { return partner_[e.u] == e.v; }
  bool is_perfect() const noexcept { return 2 * size_ == order(); }

  void add(const Edge& e);
  void remove(const Edge& e);
  // Unmatches v and its partner, if any.
  void unmatch(Vertex v);

  EdgeList edges() const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.partner_ == b.partner_;
  }

 private:
  std::vector<Vertex> partner_;
  int size_ = 0;
};

// Edges and vertices hidden from a matching computation; the graph itself is
// left untouched so that warm starts keep vertex ids.
struct MatchingMask {
  std::vector<bool> removed_vertices;
  std::vector<Edge> removed_edges;

  bool vertex_removed(Vertex v) const {
    return !removed_vertices.empty() && removed_vertices[v];
  }
  bool edge_removed(Vertex a, Vertex b) const;
};

// Every edge of m belongs to g and m is a matching.
bool is_matching_of(const Graph& g, const Matching& m);

// Hopcroft-Karp over the A side. Deterministic for a fixed graph.
Matching maximum_matching(const Graph& g, const Bipartition& b);
Matching maximum_matching(const Graph& g, const Bipartition& b, const MatchingMask& mask);

// Grows m by one augmenting path if one exists in the masked graph.
bool augment_once(const Graph& g, const Bipartition& b, Matching& m,
                  const MatchingMask& mask = {});

int matching_number(const Graph& g, const Bipartition& b);

// n - mu, by Konig's theorem.
int alpha(const Graph& g, const Bipartition& b);

struct StableSet {
  VertexSet members;
  bool is_maximum = false;
};

// (A \ Z) u (B n Z), Z = vertices reachable by alternating paths from
// unmatched A vertices. m must be maximum.
VertexSet konig_cover(const Graph& g, const Bipartition& b, const Matching& m);

StableSet maximum_stable_set(const Graph& g, const Bipartition& b);

bool has_perfect_matching(const Graph& g, const Bipartition& b);

// Vertices lying in every maximum stable set: alpha(G - v) = alpha(G) - 1.
VertexSet stable_core(const Graph& g, const Bipartition& b);

// Edges lying in every maximum matching: mu(G - e) = mu(G) - 1.
EdgeList matching_core(const Graph& g, const Bipartition& b);

// Spanning tree built from a maximum matching plus acyclic connectors; it has
// the same stability number as g. Throws not_connected.
Graph alpha_preserving_spanning_tree(const Graph& g, const Bipartition& b);

}  // namespace alphastab
