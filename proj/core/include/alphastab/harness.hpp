#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "alphastab/graph.hpp"

namespace alphastab {

// Graph families a claim quantifies over.
enum class Domain {
  all_graphs,
  connected_graphs,
  bipartite,
  connected_bipartite,
  chordal,
  connected_chordal,
  trees,
  custom,  // the claim builds its own instances
};

struct ClaimContext {
  int max_n = 0;
};

// Returns a description of the violation, or nullopt when the claim holds.
using ClaimCheck = std::function<std::optional<std::string>(const Graph&, const ClaimContext&)>;
// Custom instance source for graphs up to max_n vertices.
using InstanceSource = std::function<std::vector<Graph>(int max_n)>;

struct Claim {
  std::string name;
  std::string summary;
  Domain domain = Domain::all_graphs;
  int min_n = 1;
  // Exhaustive range cap for claims whose check builds larger graphs.
  int max_n = 8;
  // Also run on sampled connected bipartite graphs beyond the exhaustive range.
  bool sampled = false;
  // Deliberately false; only runs when named explicitly.
  bool hidden = false;
  ClaimCheck check;
  InstanceSource instances;
};

const std::vector<Claim>& registered_claims();
std::vector<std::string> claim_names(bool include_hidden = false);

struct Counterexample {
  std::string detail;
  std::string graph;  // edge-list text
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct ClaimResult {
  std::string name;
  long long instances = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  friend bool operator==(const ClaimResult&, const ClaimResult&) = default;
};

struct HarnessReport {
  std::vector<ClaimResult> claims;
  std::uint64_t seed = 0;
  int max_n = 0;
  int sample = 0;

  bool passed() const;
  friend bool operator==(const HarnessReport&, const HarnessReport&) = default;
};

inline constexpr int kMaxExhaustiveHarnessOrder = 8;
inline constexpr int kMaxSampledHarnessOrder = 14;

struct HarnessOptions {
  int max_n = 6;
  // Empty runs every non-hidden claim.
  std::vector<std::string> claims;
  std::uint64_t seed = 1;
  // Sampled connected bipartite graphs per sampled claim. Orders are drawn
  // from 9..max_n when max_n > 8, else from 2..max_n.
  int sample = 0;
  int threads = 1;
};

// Runs the selected claims over every graph of their domain with at most
// min(max_n, 8) vertices, then over the samples. Throws invalid_argument for
// unknown claim names or max_n out of range (above 8 needs sample > 0, and
// never above 14).
HarnessReport theorem_harness(const HarnessOptions& options);

// The index-th sampled graph, reproducible from the seed.
Graph harness_sample(std::uint64_t seed, long long index, int max_n);

}  // namespace alphastab
