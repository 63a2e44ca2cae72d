// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Expected values come from subset enumeration (support/brute) and the
// exhaustive oracle, never from the structural algorithms under test.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "alphastab/certificates.hpp"
#include "alphastab/chordal.hpp"
#include "alphastab/edge_classifier.hpp"
#include "alphastab/enumeration.hpp"
#include "alphastab/generators.hpp"
#include "alphastab/harness.hpp"
#include "alphastab/matching.hpp"
#include "alphastab/oracle.hpp"
#include "alphastab/stability.hpp"
#include "support/brute.hpp"

using namespace alphastab;

namespace {

// Pinned settings.
constexpr int kMaxExhaustive = 8;
constexpr int kSampleCount = 1000;
constexpr int kSampleMaxOrder = 14;
constexpr std::uint64_t kSampleSeed = 20240601;
constexpr int kConstructionTrials = 500;
constexpr int kEarGrowthMaxOrder = 40;
constexpr double kKonigBudgetSeconds = 60.0;
constexpr double kConstructionBudgetSeconds = 120.0;

using Failure = std::optional<std::string>;

struct Tally {
  long long checked = 0;
  Failure first;

  void fail(const std::string& what, const Graph& g) {
    if (!first) first = what + " on\n" + write_graph(g);
  }
};

std::vector<Graph> all_of(const std::function<std::vector<Graph>(int)>& family, int lo, int hi) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n) {
    const std::vector<Graph> part = family(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

VertexSet side(const Bipartition& b, bool a) { return a ? b.class_a : b.class_b; }

bool every_system_two_dominating(const Graph& g) {
  for (const VertexSet& s : brute::maximum_stable_sets(g)) {
    if (!is_n_dominating(g, s, 2).dominating) return false;
  }
  return true;
}

bool color_classes_are_systems(const Graph& g, const Bipartition& b) {
  const int a = brute::alpha(g);
  return static_cast<int>(b.class_a.size()) == a && static_cast<int>(b.class_b.size()) == a;
}

VertexSet brute_core(const Graph& g) {
  const auto systems = brute::maximum_stable_sets(g);
  VertexSet core = systems.front();
  for (const VertexSet& s : systems) {
    VertexSet next;
    std::set_intersection(core.begin(), core.end(), s.begin(), s.end(), std::back_inserter(next));
    core = next;
  }
  return core;
}

// Every nonempty proper subset X of class A has more than |X| neighbours.
bool hall_surplus(const Graph& g, const Bipartition& b) {
  const VertexSet& a = b.class_a;
  if (a.size() != b.class_b.size()) return false;
  const int k = static_cast<int>(a.size());
  for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
    std::vector<char> hit(g.order(), 0);
    int x = 0;
    int nx = 0;
    for (int i = 0; i < k; ++i) {
      if (!(mask >> i & 1u)) continue;
      ++x;
      for (Vertex w : g.neighbors(a[i])) nx += hit[w] ? 0 : (hit[w] = 1);
    }
    if (nx <= x) return false;
  }
  return true;
}

bool cross_pairs_leave_perfect_matching(const Graph& g, const Bipartition& b) {
  for (Vertex a : b.class_a) {
    for (Vertex bb : b.class_b) {
      const VertexSet removed{std::min(a, bb), std::max(a, bb)};
      const Graph h = remove_vertices(g, removed).graph;
      if (2 * brute::mu(h) != h.order()) return false;
    }
  }
  return true;
}

// Enumeration of perfect matchings decides allowed edges independently of
// the classifier.
bool every_edge_in_some_perfect_matching(const Graph& g) {
  if (2 * brute::mu(g) != g.order()) return false;
  std::vector<char> used(g.size(), 0);
  for (const auto& m : brute::maximum_matchings(g)) {
    for (const Edge& e : m) used[g.edge_index(e)] = 1;
  }
  return std::all_of(used.begin(), used.end(), [](char c) { return c != 0; });
}

bool has_valid_ear_decomposition(const Graph& g) {
  try {
    const EarDecomposition dec = ear_decomposition(g);
    return !check_ear_decomposition(g, dec).has_value();
  } catch (const Error&) {
    return false;
  }
}

void ac1(Tally& t) {
  const auto start = std::chrono::steady_clock::now();
  const auto check = [&](const Graph& g) {
    ++t.checked;
    const Bipartition b = require_bipartition(g);
    const int a = static_cast<int>(maximum_stable_set(g, b).members.size());
    const int m = matching_number(g, b);
    if (a != brute::alpha(g) || m != brute::mu(g)) t.fail("alpha or mu disagrees with enumeration", g);
    if (a + m != g.order()) t.fail("alpha + mu != n", g);
  };
  for (int n = 1; n <= kMaxExhaustive; ++n) {
    for (const Graph& g : connected_bipartite_graphs(n)) check(g);
  }
  for (int i = 0; i < kSampleCount; ++i) check(harness_sample(kSampleSeed, i, kSampleMaxOrder));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > kKonigBudgetSeconds) t.first = t.first.value_or("took " + std::to_string(secs) + " s");
}

void ac2(Tally& t) {
  for (const Graph& g : all_of(bipartite_graphs, 1, kMaxExhaustive)) {
    ++t.checked;
    const bool structural = is_alpha_minus(g).stable;
    if (structural != def_alpha_minus(g) || structural != every_system_two_dominating(g) ||
        structural != brute::alpha_minus(g)) {
      t.fail("alpha-minus characterizations disagree", g);
    }
  }
}

void ac3(Tally& t) {
  for (const Graph& g : all_of(connected_bipartite_graphs, 2, kMaxExhaustive)) {
    ++t.checked;
    const Bipartition b = require_bipartition(g);
    const bool pm = 2 * brute::mu(g) == g.order();
    const bool verdicts[] = {
        has_perfect_matching(g, b),  is_alpha_plus(g).stable,           def_alpha_plus(g),
        brute::alpha_plus(g),        brute_core(g).empty(),             stable_core(g, b).empty(),
        color_classes_are_systems(g, b),
    };
    for (bool v : verdicts) {
      if (v != pm) t.fail("alpha-plus characterizations disagree", g);
    }
  }
}

void ac4(Tally& t) {
  for (const Graph& g : all_of(connected_bipartite_graphs, 4, kMaxExhaustive)) {
    ++t.checked;
    const Bipartition b = require_bipartition(g);
    const bool expected = brute::alpha_stable(g);
    const EdgeClassification cls = classify_edges(g, b);
    const bool pm = has_perfect_matching(g, b);
    const bool no_mandatory = pm && !cls.any(EdgeStatus::mandatory);
    bool degree_two = pm;
    bool cycles = pm;
    if (pm) {
      const std::vector<int> deg = allowed_degree(cls);
      degree_two = std::all_of(deg.begin(), deg.end(), [](int d) { return d >= 2; });
      for (Vertex v = 0; v < g.order(); ++v) {
        const auto c = alternating_cycle_through(g, b, cls, v);
        if (!c) {
          cycles = false;
        } else if (check_alternating_cycle(g, cls.reference_matching, v, *c)) {
          t.fail("invalid alternating cycle", g);
        }
      }
    }
    bool no_k2 = false;
    try {
      no_k2 = bistable_decomposition(g).k2_pieces.empty();
    } catch (const Error&) {
    }
    const bool verdicts[] = {is_alpha_stable(g).alpha_stable, def_alpha_stable(g), no_mandatory,
                             degree_two, cycles, no_k2};
    for (bool v : verdicts) {
      if (v != expected) t.fail("alpha-stable characterizations disagree", g);
    }
  }
}

void ac5(Tally& t) {
  for (const Graph& g : all_of(connected_bipartite_graphs, 4, kMaxExhaustive)) {
    ++t.checked;
    const Bipartition b = require_bipartition(g);
    const auto systems = brute::maximum_stable_sets(g);
    const bool expected = systems == std::vector<VertexSet>{std::min(b.class_a, b.class_b),
                                                            std::max(b.class_a, b.class_b)};
    const auto oracle_systems = enumerate_maximum_stable_sets(g);
    const bool oracle_two = oracle_systems.size() == 2 &&
                            std::all_of(oracle_systems.begin(), oracle_systems.end(), [&](const VertexSet& s) {
                              return s == b.class_a || s == b.class_b;
                            });
    const bool verdicts[] = {
        is_bistable(g).bistable,
        oracle_two,
        brute::bistable(g),
        hall_surplus(g, b),
        color_classes_are_systems(g, b) && cross_pairs_leave_perfect_matching(g, b),
        every_edge_in_some_perfect_matching(g),
        has_valid_ear_decomposition(g),
    };
    for (bool v : verdicts) {
      if (v != expected) t.fail("bistable characterizations disagree", g);
    }
  }
}

void ac6(Tally& t) {
  for (const Graph& g : all_of(connected_bipartite_graphs, 2, kMaxExhaustive)) {
    ++t.checked;
    if (brute_core(g).size() == 1) t.fail("stable core of size one", g);
    if (stable_core(g, require_bipartition(g)).size() == 1) t.fail("reported stable core of size one", g);
  }
  for (const Graph& g : all_of(chordal_graphs, 2, kMaxExhaustive)) {
    if (!is_connected(g)) continue;
    ++t.checked;
    if (brute::alpha_stable(g)) t.fail("connected chordal graph is alpha-stable", g);
    if (is_alpha_stable(g).alpha_stable) t.fail("connected chordal graph reported alpha-stable", g);
  }
}

// Bistable graphs used as construction inputs.
Graph small_bistable(std::mt19937_64& rng, int max_order) {
  const int target = 2 * std::uniform_int_distribution<int>(1, max_order / 2)(rng);
  return ear_growth(rng(), target).graph;
}

void ac7(Tally& t) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < kConstructionTrials; ++i) {
    ++t.checked;
    const int target = 2 * (1 + i % (kEarGrowthMaxOrder / 2));
    const EarGrowth grown = ear_growth(kSampleSeed + i, target);
    const Graph& g = grown.graph;
    if (g.order() != target) t.fail("ear_growth order", g);
    if (!is_bistable(g).bistable) t.fail("ear_growth output not bistable", g);
    if (g.order() <= 16 && !brute::bistable(g)) t.fail("ear_growth output not bistable by enumeration", g);
    const EarDecomposition dec = ear_decomposition(g);
    if (reconstruct(dec, g.order()) != g) t.fail("ear decomposition does not rebuild the graph", g);
    if (static_cast<int>(dec.ears.size()) != g.size() - g.order() + 1) t.fail("ear count", g);
    for (int k = 0; k <= static_cast<int>(dec.ears.size()); ++k) {
      if (!is_bistable(ear_prefix(dec, g.order(), k).graph).bistable) t.fail("prefix not bistable", g);
    }
  }

  std::mt19937_64 rng(kSampleSeed);
  const PortChooser random_port = [&rng](int, bool, const VertexSet& c) {
    return c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)];
  };
  for (int i = 0; i < kConstructionTrials; ++i) {
    ++t.checked;
    const Graph templ = ear_growth(rng(), 2 * std::uniform_int_distribution<int>(2, 3)(rng)).graph;
    std::vector<Graph> pieces;
    for (int p = 0; p < templ.order() / 2; ++p) pieces.push_back(small_bistable(rng, 4));
    const Construction c = substitute(templ, pieces, random_port);
    if (!c.report.bistable.bistable) t.fail("substitution not bistable", c.graph);
    if (check_report(c.graph, c.report)) t.fail("substitution certificate rejected", c.graph);
    if (c.graph.order() <= 16 && !brute::bistable(c.graph)) t.fail("substitution not bistable by enumeration", c.graph);
  }

  for (int i = 0; i < kConstructionTrials; ++i) {
    ++t.checked;
    // Alpha-stable pieces (bistable) or alpha-plus-only pieces (even paths).
    const int count = std::uniform_int_distribution<int>(2, 3)(rng);
    std::vector<Graph> pieces;
    bool all_stable = true;
    for (int p = 0; p < count; ++p) {
      if (rng() % 3 == 0) {
        pieces.push_back(path(2 * std::uniform_int_distribution<int>(1, 2)(rng)));
        all_stable = false;
      } else {
        pieces.push_back(small_bistable(rng, 6));
        // K2 is bistable but its edge is mandatory.
        all_stable = all_stable && pieces.back().order() > 2;
      }
    }
    const std::vector<Vertex> offset = piece_offsets(pieces);
    EdgeList bridges;
    for (int p = 1; p < count; ++p) {
      const int q = std::uniform_int_distribution<int>(0, p - 1)(rng);
      const Bipartition bp = require_bipartition(pieces[p]);
      const Bipartition bq = require_bipartition(pieces[q]);
      const VertexSet from = side(bp, true);
      const VertexSet to = side(bq, false);
      const Vertex u = from[rng() % from.size()];
      const Vertex w = to[rng() % to.size()];
      bridges.emplace_back(offset[p] + u, offset[q] + w);
    }
    const Construction c = union_connect(pieces, bridges);
    if (check_report(c.graph, c.report)) t.fail("union certificate rejected", c.graph);
    if (!c.report.alpha_plus.stable || !def_alpha_plus(c.graph)) t.fail("union not alpha-plus", c.graph);
    if (all_stable && (!c.report.alpha_stable || !def_alpha_stable(c.graph))) {
      t.fail("union of alpha-stable pieces not alpha-stable", c.graph);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > kConstructionBudgetSeconds) t.first = t.first.value_or("took " + std::to_string(secs) + " s");
}

void ac8(Tally& t) {
  for (const Graph& g : all_of(chordal_graphs, 1, kMaxExhaustive)) {
    ++t.checked;
    const ChordalityResult r = is_chordal(g);
    if (!r.chordal()) {
      t.fail("chordal graph not recognized", g);
      continue;
    }
    const StableSet s = chordal_maximum_stable_set(g, *r.peo);
    if (!is_stable_set(g, s.members) || static_cast<int>(s.members.size()) != oracle_alpha(g) ||
        oracle_alpha(g) != brute::alpha(g)) {
      t.fail("greedy alpha differs", g);
    }
    if (chordal_alpha_minus(g).stable != def_alpha_minus(g) || def_alpha_minus(g) != brute::alpha_minus(g)) {
      t.fail("chordal alpha-minus differs", g);
    }
  }
}

void ac9(Tally& t) {
  const auto check = [&](const Graph& g) {
    ++t.checked;
    const Bipartition b = require_bipartition(g);
    const EdgeClassification fast = classify_edges(g, b);
    const EdgeClassification slow = classify_edges_by_rematching(g, b);
    if (fast.status != slow.status) t.fail("edge classifications differ", g);
  };
  for (const Graph& g : all_of(bipartite_graphs, 1, kMaxExhaustive)) check(g);
  for (int i = 0; i < kSampleCount; ++i) check(harness_sample(kSampleSeed + 1, i, kSampleMaxOrder));
}

void ac10(Tally& t) {
  const Graph k33 = complete_bipartite(3, 3);
  t.checked += 2;
  if (!is_alpha_minus(k33).stable || !def_alpha_minus(k33)) t.fail("K3,3 not alpha-minus", k33);
  if (enumerate_maximum_stable_sets(k33).size() != 2 || brute::maximum_stable_sets(k33).size() != 2) {
    t.fail("K3,3 does not have two stability systems", k33);
  }
  Graph chord = even_cycle(6).with_edge(Edge(0, 3));
  if (!is_alpha_minus(chord).stable || !def_alpha_minus(chord)) t.fail("C6 plus chord not alpha-minus", chord);
  for (int k = 1; k <= 10; ++k) {
    const Graph p = path(2 * k);
    ++t.checked;
    if (!is_alpha_plus(p).stable || !def_alpha_plus(p)) t.fail("even path not alpha-plus", p);
  }
  for (int k = 4; k <= 20; k += 2) {
    const Graph c = even_cycle(k);
    ++t.checked;
    if (!is_alpha_stable(c).alpha_stable || !def_alpha_stable(c)) t.fail("even cycle not alpha-stable", c);
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)(Tally&);
  };
  const Criterion criteria[] = {
      {"AC1 konig identity, exhaustive n<=8 and 1000 samples n<=14", ac1},
      {"AC2 alpha-minus characterizations on bipartite n<=8", ac2},
      {"AC3 alpha-plus characterizations on connected bipartite 2<=n<=8", ac3},
      {"AC4 alpha-stable characterizations on connected bipartite 4<=n<=8", ac4},
      {"AC5 bistable characterizations on connected bipartite 4<=n<=8", ac5},
      {"AC6 no stable core of size one, no alpha-stable connected chordal graph", ac6},
      {"AC7 ear growth, substitution and union round-trips", ac7},
      {"AC8 chordal greedy alpha and alpha-minus on chordal n<=8", ac8},
      {"AC9 fast edge classification equals rematching", ac9},
      {"AC10 named instances", ac10},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.first = std::string("exception: ") + e.what();
    }
    const Failure& f = t.first;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s (%lld instances, %.1f s)\n", f ? "FAIL" : "PASS", c.name, t.checked, secs);
    if (f) {
      std::printf("  %s\n", f->c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
