#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alphastab/error.hpp"

namespace alphastab {

using Vertex = int;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws Error on loops or out-of-range endpoints. Duplicates collapse.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  const EdgeList& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  // Position of e in edges(), or -1.
  int edge_index(const Edge& e) const;

  Graph with_edge(const Edge& e) const;
  Graph without_edge(const Edge& e) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  EdgeList edges_;
};

struct ParsedGraph {
  Graph graph;
  int duplicate_edges = 0;
  // "# key=value" comment lines, in file order.
  std::vector<std::pair<std::string, std::string>> metadata;
};

// Edge-list document: "n m" then m lines "u v". Lines starting with '#' and
// blank lines are skipped. Errors name the 1-based line number.
ParsedGraph parse_graph(std::string_view text);
ParsedGraph read_graph_file(const std::string& path);

std::string write_graph(
    const Graph& g,
    std::span<const std::pair<std::string, std::string>> metadata = {});

struct Bipartition {
  VertexSet class_a;
  VertexSet class_b;
  // side[v] == 0 for class A, 1 for class B.
  std::vector<std::uint8_t> side;

  bool in_a(Vertex v) const { return side[v] == 0; }
  bool balanced() const { return class_a.size() == class_b.size(); }
};

struct BipartitionResult {
  std::optional<Bipartition> parts;
  // Odd closed walk when parts is empty: consecutive vertices (and the last
  // and first) are adjacent.
  std::vector<Vertex> odd_cycle;

  bool bipartite() const { return parts.has_value(); }
};

// Breadth-first 2-coloring per component; the smallest vertex of every
// component goes to class A.
BipartitionResult bipartition(const Graph& g);

// Throws not_bipartite if g has an odd cycle.
Bipartition require_bipartition(const Graph& g);

bool is_valid_bipartition(const Graph& g, const Bipartition& b);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // to_original[new_id] = old id; ascending.
  std::vector<Vertex> to_original;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// G - W.
InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> removed);

struct DominationCheck {
  bool dominating = true;
  std::optional<Vertex> witness;
};

// Every vertex outside d has at least k neighbors in d.
DominationCheck is_n_dominating(const Graph& g, std::span<const Vertex> d, int k);

VertexSet pendant_vertices(const Graph& g);

EdgeList complement_edges(const Graph& g);
EdgeList bipartite_complement_edges(const Graph& g, const Bipartition& b);

bool is_stable_set(const Graph& g, std::span<const Vertex> s);
bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover);

// Graph is a tree: connected with n-1 edges.
bool is_tree(const Graph& g);

std::string format_edge(const Edge& e);
std::string format_vertices(std::span<const Vertex> vs);

}  // namespace alphastab
