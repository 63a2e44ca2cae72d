#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "alphastab/graph.hpp"

namespace alphastab {

using GraphSink = std::function<void(const Graph&)>;

// Isomorphism-invariant code: upper-triangle adjacency bits under the
// lexicographically smallest labeling reachable by individualization and
// color refinement.
std::string canonical_code(const Graph& g);

// g relabeled into its canonical labeling.
Graph canonical_graph(const Graph& g);

// Every graph on n vertices up to isomorphism, canonically labeled and sorted
// by canonical code. n <= 8; results are cached per process.
const std::vector<Graph>& all_graphs(int n);

// Every connected bipartite graph on n unlabeled vertices exactly once.
// Class A is 0..p-1 with p <= n - p. n <= 8. Returns the count.
long long enumerate_connected_bipartite(int n, const GraphSink& sink);
const std::vector<Graph>& connected_bipartite_graphs(int n);

// Bipartite graphs on n vertices, connected or not.
std::vector<Graph> bipartite_graphs(int n);
std::vector<Graph> chordal_graphs(int n);
std::vector<Graph> connected_graphs(int n);

// Trees on n unlabeled vertices, n <= 12.
const std::vector<Graph>& trees(int n);

// Random connected bipartite graph: |A| uniform in 1..n-1, each cross pair
// present with probability 1/2, redrawn until connected.
Graph sample_connected_bipartite(int n, std::mt19937_64& rng);

}  // namespace alphastab
