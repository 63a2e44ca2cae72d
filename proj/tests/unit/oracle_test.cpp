#include <gtest/gtest.h>

#include <algorithm>

#include "alphastab/enumeration.hpp"
#include "alphastab/oracle.hpp"
#include "support/brute.hpp"
#include "support/named.hpp"

using namespace alphastab;

namespace {

std::vector<EdgeList> as_edge_lists(const std::vector<Matching>& ms) {
  std::vector<EdgeList> out;
  for (const Matching& m : ms) {
    EdgeList e = m.edges();
    std::sort(e.begin(), e.end());
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Oracle, AlphaExamples) {
  EXPECT_EQ(oracle_alpha(named::c5()), 2);
  EXPECT_EQ(oracle_alpha(named::k33()), 3);
  EXPECT_EQ(oracle_alpha(named::petersen()), 4);
  EXPECT_EQ(brute::alpha(named::petersen()), 4);
  EXPECT_EQ(oracle_alpha(Graph(0)), 0);
}

TEST(Oracle, EnumerationExamples) {
  EXPECT_EQ(enumerate_maximum_stable_sets(named::p4()),
            (std::vector<VertexSet>{{0, 2}, {0, 3}, {1, 3}}));
  EXPECT_EQ(enumerate_maximum_stable_sets(named::c4()), (std::vector<VertexSet>{{0, 2}, {1, 3}}));
  EXPECT_EQ(enumerate_maximum_stable_sets(named::p3()), (std::vector<VertexSet>{{0, 2}}));

  EXPECT_EQ(as_edge_lists(enumerate_maximum_matchings(named::p3())),
            (std::vector<EdgeList>{{{0, 1}}, {{1, 2}}}));
  EXPECT_EQ(as_edge_lists(enumerate_maximum_matchings(named::c4())),
            (std::vector<EdgeList>{{{0, 1}, {2, 3}}, {{0, 3}, {1, 2}}}));
  EXPECT_EQ(as_edge_lists(enumerate_maximum_matchings(named::p4())),
            (std::vector<EdgeList>{{{0, 1}, {2, 3}}}));
}

TEST(Oracle, DefinitionExamples) {
  EXPECT_TRUE(def_alpha_minus(named::k33()));
  EXPECT_FALSE(def_alpha_minus(named::p4()));
  EXPECT_FALSE(def_alpha_minus(named::k2()));
  EXPECT_EQ(find_alpha_minus_violation(named::k2()), Edge(0, 1));

  EXPECT_TRUE(def_alpha_plus(named::p4()));
  EXPECT_FALSE(def_alpha_plus(named::p3()));
  EXPECT_EQ(find_alpha_plus_violation(named::p3()), Edge(0, 2));
  EXPECT_TRUE(def_alpha_plus(named::c4()));

  EXPECT_TRUE(def_alpha_stable(named::c4()));
  EXPECT_FALSE(def_alpha_stable(named::p4()));
  EXPECT_TRUE(def_alpha_stable(named::c6_chord()));
}

TEST(Oracle, BudgetIsEnforced) {
  OracleBudget tiny;
  tiny.max_vertices_exact_alpha = 4;
  tiny.max_vertices_enumeration = 4;
  EXPECT_THROW(oracle_alpha(named::c5(), tiny), Error);
  EXPECT_THROW(enumerate_maximum_stable_sets(named::c5(), tiny), Error);
  EXPECT_THROW(enumerate_maximum_matchings(named::c5(), tiny), Error);
  try {
    oracle_alpha(named::c5(), tiny);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::budget_exceeded);
  }
}

// Everything the oracle answers, against subset enumeration, on every graph
// up to 7 vertices (and alpha/mu up to 8).
TEST(Oracle, AgreesWithBruteForce) {
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : all_graphs(n)) {
      ASSERT_EQ(oracle_alpha(g), brute::alpha(g)) << write_graph(g);
      ASSERT_EQ(oracle_mu(g), brute::mu(g)) << write_graph(g);
      if (n > 7) continue;
      EXPECT_EQ(enumerate_maximum_stable_sets(g), brute::maximum_stable_sets(g));
      if (g.size() <= 16) {
        EXPECT_EQ(as_edge_lists(enumerate_maximum_matchings(g)), brute::maximum_matchings(g));
      }
      EXPECT_EQ(def_alpha_minus(g), brute::alpha_minus(g));
      EXPECT_EQ(def_alpha_plus(g), brute::alpha_plus(g));
    }
  }
}

TEST(Oracle, AlphaOnLargerGraphs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Edge> edges;
    const int n = 16;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng() % 4 == 0) edges.emplace_back(u, v);
      }
    }
    const Graph g(n, edges);
    EXPECT_EQ(oracle_alpha(g), brute::alpha(g));
    EXPECT_EQ(oracle_mu(g), brute::mu(g));
  }
}
