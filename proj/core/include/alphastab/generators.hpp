#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "alphastab/graph.hpp"
#include "alphastab/stability.hpp"

namespace alphastab {

// Cycle 0-1-...-(k-1)-0, k even and at least 4.
Graph even_cycle(int k);
// Class A is 0..p-1, class B is p..p+q-1.
Graph complete_bipartite(int p, int q);
// Path 0-1-...-(k-1), k >= 2.
Graph path(int k);
// Uniform labeled tree on k >= 2 vertices from a random Pruefer sequence.
Graph random_tree(int k, std::uint64_t seed);

struct EarGrowth {
  Graph graph;
  EarDecomposition decomposition;
  std::uint64_t seed = 0;
};

// Starts from the edge 0-1 and attaches ears until the graph has `target`
// vertices. Each ear gets 2j fresh internal vertices, j geometric with
// parameter 1/2, capped by what is left. An ear without internal vertices
// needs a non-adjacent pair across the classes; when none exists the ear gets
// two internal vertices instead. target must be even and >= 2.
EarGrowth ear_growth(std::uint64_t seed, int target);

// Attachment of path vertex `position` (0..k-1) to vertex `host` of h.
struct PathAttachment {
  int position = 0;
  Vertex host = 0;
};

struct Construction {
  Graph graph;
  StabilityReport report;
};

// h plus a path on k new vertices (ids h.order()..h.order()+k-1) and the
// given attachment edges. h must be bistable, k even >= 2, both path ends
// attached, and the result bipartite: parity_violation, endpoint_not_attached,
// not_bistable, not_bipartite otherwise.
Construction attach_even_path(const Graph& h, int k, const std::vector<PathAttachment>& attachments);

namespace detail {
// Same construction with every precondition skipped.
Graph attach_even_path_unchecked(const Graph& h, int k,
                                 const std::vector<PathAttachment>& attachments);
}  // namespace detail

// Picks the vertex of piece `piece` used for a connection edge; `candidates`
// is the piece's class A (a_side) or class B in local ids.
using PortChooser = std::function<Vertex(int piece, bool a_side, const VertexSet& candidates)>;

Vertex lowest_port(int piece, bool a_side, const VertexSet& candidates);

// The template's perfect matching pairs x_i with y_i; piece i replaces that
// pair. Every template edge x_i y_j with i != j becomes one edge from a port
// in class A of piece i to a port in class B of piece j. Piece i occupies
// ids after pieces 0..i-1. The template must be bistable with p >= 2 pairs
// and there must be p bistable pieces.
Construction substitute(const Graph& templ, const std::vector<Graph>& pieces,
                        const PortChooser& choose = lowest_port);

namespace detail {
// Substitution for an arbitrary template; `pairing` is a perfect matching of
// the template and pair i is the i-th matched A vertex in ascending order.
Graph substitute_unchecked(const Graph& templ, const Matching& pairing,
                           const std::vector<Graph>& pieces, const PortChooser& choose);
}  // namespace detail

// Disjoint union (piece i after pieces 0..i-1) plus bridges in global ids.
// Throws not_bipartite or not_connected for a bad result.
Construction union_connect(const std::vector<Graph>& pieces, const EdgeList& bridges);

// Global id of vertex 0 of each piece in a disjoint union.
std::vector<Vertex> piece_offsets(const std::vector<Graph>& pieces);

}  // namespace alphastab
