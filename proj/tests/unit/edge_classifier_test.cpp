#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "alphastab/certificates.hpp"
#include "alphastab/edge_classifier.hpp"
#include "alphastab/enumeration.hpp"
#include "support/brute.hpp"
#include "support/named.hpp"

using namespace alphastab;

namespace {

EdgeClassification classify(const Graph& g) { return classify_edges(g, require_bipartition(g)); }

std::vector<EdgeStatus> brute_status(const Graph& g) {
  const auto all = brute::maximum_matchings(g);
  std::vector<EdgeStatus> out;
  for (const Edge& e : g.edges()) {
    const auto hits = std::count_if(all.begin(), all.end(), [&](const std::vector<Edge>& m) {
      return std::binary_search(m.begin(), m.end(), e);
    });
    out.push_back(hits == 0 ? EdgeStatus::forbidden
                  : hits == static_cast<long>(all.size()) ? EdgeStatus::mandatory
                                                          : EdgeStatus::optional);
  }
  return out;
}

void expect_alternating(const Graph& g, const Matching& m, Vertex v, const std::vector<Vertex>& cycle) {
  ASSERT_GE(cycle.size(), 4u);
  EXPECT_EQ(cycle.size() % 2, 0u);
  EXPECT_EQ(cycle.front(), v);
  std::vector<Vertex> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end()) << "not simple";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Edge e(cycle[i], cycle[(i + 1) % cycle.size()]);
    EXPECT_TRUE(g.has_edge(e));
    EXPECT_EQ(m.contains(e), i % 2 == 0) << "edge " << format_edge(e);
  }
}

}  // namespace

TEST(EdgeClassifier, Examples) {
  const EdgeClassification c4 = classify(named::c4());
  EXPECT_EQ(c4.with_status(EdgeStatus::optional).size(), 4u);

  const EdgeClassification p4 = classify(named::p4());
  EXPECT_EQ(p4.status_of(Edge(0, 1)), EdgeStatus::mandatory);
  EXPECT_EQ(p4.status_of(Edge(2, 3)), EdgeStatus::mandatory);
  EXPECT_EQ(p4.status_of(Edge(1, 2)), EdgeStatus::forbidden);

  const EdgeClassification chord = classify(named::c6_chord());
  EXPECT_EQ(chord.with_status(EdgeStatus::optional).size(), 7u);
}

TEST(EdgeClassifier, AllowedDegreeExamples) {
  EXPECT_EQ(allowed_degree(classify(named::c4())), (std::vector<int>{2, 2, 2, 2}));
  EXPECT_EQ(allowed_degree(classify(named::p4())), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(allowed_degree(classify(named::k33())), (std::vector<int>(6, 3)));
  EXPECT_THROW(allowed_degree(classify(named::p3())), Error);
}

TEST(EdgeClassifier, AlternatingCycleExamples) {
  const Graph c4 = named::c4();
  const Bipartition b = require_bipartition(c4);
  const EdgeClassification cls = classify_edges(c4, b);
  const auto cycle = alternating_cycle_through(c4, b, cls, 0);
  ASSERT_TRUE(cycle);
  std::vector<Vertex> sorted = *cycle;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<Vertex>{0, 1, 2, 3}));
  expect_alternating(c4, cls.reference_matching, 0, *cycle);

  const Graph p4 = named::p4();
  const Bipartition pb = require_bipartition(p4);
  EXPECT_FALSE(alternating_cycle_through(p4, pb, classify_edges(p4, pb), 0));

  const Graph chord = named::c6_chord();
  const Bipartition cb = require_bipartition(chord);
  const EdgeClassification ccls = classify_edges(chord, cb);
  const auto through3 = alternating_cycle_through(chord, cb, ccls, 3);
  ASSERT_TRUE(through3);
  EXPECT_TRUE(through3->size() == 4 || through3->size() == 6);
  expect_alternating(chord, ccls.reference_matching, 3, *through3);
}

TEST(EdgeClassifier, SymmetricDifferenceExamples) {
  const Graph c4 = named::c4();
  const Matching m1(4, std::vector<Edge>{Edge(0, 1), Edge(2, 3)});
  const Matching m2(4, std::vector<Edge>{Edge(1, 2), Edge(0, 3)});
  const CycleFamily fam = symmetric_difference_cycles(c4, m1, m2);
  ASSERT_EQ(fam.cycles.size(), 1u);
  EXPECT_EQ(fam.cycles[0].size(), 4u);
  EXPECT_TRUE(fam.shared_edges.empty());

  const CycleFamily same = symmetric_difference_cycles(c4, m1, m1);
  EXPECT_TRUE(same.cycles.empty());
  EXPECT_EQ(same.shared_edges, m1.edges());

  const Graph chord = named::c6_chord();
  const Matching a(6, std::vector<Edge>{Edge(0, 1), Edge(2, 3), Edge(4, 5)});
  const Matching c(6, std::vector<Edge>{Edge(0, 3), Edge(1, 2), Edge(4, 5)});
  const CycleFamily cf = symmetric_difference_cycles(chord, a, c);
  ASSERT_EQ(cf.cycles.size(), 1u);
  std::vector<Vertex> sorted = cf.cycles[0];
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(cf.shared_edges, (EdgeList{{4, 5}}));

  EXPECT_THROW(symmetric_difference_cycles(named::p3(), Matching(3, std::vector<Edge>{Edge(0, 1)}),
                                           Matching(3, std::vector<Edge>{Edge(1, 2)})),
               Error);
}

// Both classifiers against the full list of maximum matchings, and the
// mandatory set against the matching core.
TEST(EdgeClassifier, AgreesWithEnumerationOnAllBipartiteGraphs) {
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : bipartite_graphs(n)) {
      const Bipartition b = require_bipartition(g);
      const EdgeClassification fast = classify_edges(g, b);
      const EdgeClassification slow = classify_edges_by_rematching(g, b);
      const auto expected = brute_status(g);
      EXPECT_EQ(fast.status, expected) << write_graph(g);
      EXPECT_EQ(slow.status, expected) << write_graph(g);
      EdgeList mandatory = fast.with_status(EdgeStatus::mandatory);
      EdgeList core = matching_core(g, b);
      std::sort(mandatory.begin(), mandatory.end());
      std::sort(core.begin(), core.end());
      EXPECT_EQ(mandatory, core);
    }
  }
}

TEST(EdgeClassifier, CyclesAreAlternatingEverywhere) {
  for (int n = 2; n <= 8; n += 2) {
    for (const Graph& g : connected_bipartite_graphs(n)) {
      const Bipartition b = require_bipartition(g);
      const EdgeClassification cls = classify_edges(g, b);
      if (!cls.reference_matching.is_perfect()) continue;
      for (Vertex v = 0; v < n; ++v) {
        const auto cycle = alternating_cycle_through(g, b, cls, v);
        // A vertex lies on an alternating cycle iff some incident edge is optional.
        const bool optional_edge = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex w) {
          return cls.status_of(Edge(v, w)) == EdgeStatus::optional;
        });
        EXPECT_EQ(cycle.has_value(), optional_edge) << write_graph(g) << " v=" << v;
        if (cycle) expect_alternating(g, cls.reference_matching, v, *cycle);
      }
    }
  }
}

TEST(EdgeClassifier, SymmetricDifferencesPartitionVertices) {
  for (const Graph& g : connected_bipartite_graphs(6)) {
    const auto all = brute::maximum_matchings(g);
    if (2 * all.front().size() != 6) continue;
    for (const auto& e1 : all) {
      for (const auto& e2 : all) {
        const Matching m1(6, e1);
        const Matching m2(6, e2);
        const CycleFamily fam = symmetric_difference_cycles(g, m1, m2);
        std::vector<int> hits(6, 0);
        for (const auto& c : fam.cycles) {
          for (Vertex v : c) ++hits[v];
          EXPECT_FALSE(check_alternating_cycle(g, m1, c.front(), c).has_value());
        }
        for (const Edge& e : fam.shared_edges) {
          ++hits[e.u];
          ++hits[e.v];
        }
        EXPECT_EQ(hits, std::vector<int>(6, 1));
      }
    }
  }
}

TEST(EdgeClassifier, DigraphStrongConnectivityMatchesNoForbidden) {
  for (int n = 2; n <= 8; n += 2) {
    for (const Graph& g : connected_bipartite_graphs(n)) {
      const Bipartition b = require_bipartition(g);
      const Matching m = maximum_matching(g, b);
      if (!m.is_perfect()) continue;
      const MatchingDigraph d = build_matching_digraph(g, b, m);
      EXPECT_EQ(static_cast<int>(d.nodes.size()), n / 2);
      const auto status = brute_status(g);
      const bool no_forbidden = std::none_of(status.begin(), status.end(),
                                             [](EdgeStatus s) { return s == EdgeStatus::forbidden; });
      EXPECT_EQ(d.strongly_connected(), no_forbidden) << write_graph(g);
    }
  }
}

TEST(EdgeClassifier, RandomLargerGraphsFastEqualsSlow) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int p = 3 + static_cast<int>(rng() % 5);
    const int q = 3 + static_cast<int>(rng() % 5);
    const Graph g = brute::random_connected_bipartite(p, q, 0.35, rng);
    const Bipartition b = require_bipartition(g);
    EXPECT_EQ(classify_edges(g, b).status, classify_edges_by_rematching(g, b).status) << write_graph(g);
  }
}
