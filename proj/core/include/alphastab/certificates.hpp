#pragma once

#include <optional>
#include <string>

#include "alphastab/graph.hpp"
#include "alphastab/stability.hpp"

namespace alphastab {

// Re-verification of report certificates against the input graph. Matching
// numbers here come from a separate depth-first augmenting-path routine, not
// the Hopcroft-Karp engine that produced the certificates. Each check returns
// a description of the first problem found, or nullopt when the certificate
// holds.
using CheckFailure = std::optional<std::string>;

CheckFailure check_alpha_minus(const Graph& g, const AlphaMinusResult& r);
CheckFailure check_alpha_plus(const Graph& g, const AlphaPlusResult& r);
CheckFailure check_bistable(const Graph& g, const BistableResult& r);
// Base plus ears rebuild g exactly; each ear joins opposite color classes of
// the part built so far and brings an even number of new vertices.
CheckFailure check_ear_decomposition(const Graph& g, const EarDecomposition& dec);
CheckFailure check_alternating_cycle(const Graph& g, const Matching& m, Vertex v,
                                     const std::vector<Vertex>& cycle);
CheckFailure check_decomposition(const Graph& g, const BistableDecomposition& dec);
// Every certificate in the report, plus its internal consistency.
CheckFailure check_report(const Graph& g, const StabilityReport& report);

// Simple augmenting-path matching number for bipartite graphs.
int reference_matching_number(const Graph& g);

}  // namespace alphastab
