#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "alphastab/graph.hpp"

// Subset-enumeration ground truth for tests. Deliberately naive: every
// answer comes from looking at all vertex or edge subsets, so it shares no
// code with the library's oracle or matching engine. Practical up to about
// 20 vertices, or 24 edges when listing matchings.
namespace brute {

using alphastab::Edge;
using alphastab::Graph;
using alphastab::Vertex;
using alphastab::VertexSet;

int alpha(const Graph& g);
int mu(const Graph& g);
std::vector<VertexSet> maximum_stable_sets(const Graph& g);
// Each maximum matching as a sorted edge list.
std::vector<std::vector<Edge>> maximum_matchings(const Graph& g);

bool alpha_minus(const Graph& g);
bool alpha_plus(const Graph& g);
inline bool alpha_stable(const Graph& g) { return alpha_minus(g) && alpha_plus(g); }

// Exactly two maximum stable sets and they partition V.
bool bistable(const Graph& g);

// Random connected bipartite graph with classes of size p and q.
Graph random_connected_bipartite(int p, int q, double density, std::mt19937_64& rng);
// Uniformly relabels g.
Graph shuffled(const Graph& g, std::mt19937_64& rng);

// Degree sequence, alpha, mu and cycle rank packed into one comparable value.
std::vector<long long> fingerprint(const Graph& g);

}  // namespace brute
