#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "alphastab/chordal.hpp"
#include "alphastab/enumeration.hpp"
#include "support/brute.hpp"
#include "support/named.hpp"

using namespace alphastab;

// Reference counts of unlabeled graphs (OEIS A000088, A001349, A033995,
// A005142, A048192, A048193, A000055).
TEST(Enumeration, CountsMatchKnownSequences) {
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044, 12346};
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853, 11117};
  const std::vector<std::size_t> bipartite{1, 2, 3, 7, 13, 35, 88, 303};
  const std::vector<std::size_t> connected_bipartite{1, 1, 1, 3, 5, 17, 44, 182};
  const std::vector<std::size_t> chordal{1, 2, 4, 10, 27, 94, 393, 2119};
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(all_graphs(n).size(), all[n - 1]) << n;
    EXPECT_EQ(connected_graphs(n).size(), connected[n - 1]) << n;
    EXPECT_EQ(bipartite_graphs(n).size(), bipartite[n - 1]) << n;
    EXPECT_EQ(connected_bipartite_graphs(n).size(), connected_bipartite[n - 1]) << n;
    EXPECT_EQ(chordal_graphs(n).size(), chordal[n - 1]) << n;
  }
  const std::vector<std::size_t> tree_counts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(trees(n).size(), tree_counts[n - 1]) << n;
}

TEST(Enumeration, ConnectedBipartiteSmallCases) {
  std::vector<Graph> seen;
  EXPECT_EQ(enumerate_connected_bipartite(2, [&](const Graph& g) { seen.push_back(g); }), 1);
  ASSERT_EQ(seen.size(), 1u);
  EXPECT_EQ(seen[0].size(), 1);
  seen.clear();
  EXPECT_EQ(enumerate_connected_bipartite(3, [&](const Graph& g) { seen.push_back(g); }), 1);
  EXPECT_EQ(canonical_code(seen[0]), canonical_code(named::p3()));
  // Frozen after the first verified run: P4, star K1,3 and C4.
  EXPECT_EQ(enumerate_connected_bipartite(4, [](const Graph&) {}), 3);
}

TEST(Enumeration, OutputsAreValidAndDistinct) {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> codes;
    for (const Graph& g : connected_bipartite_graphs(n)) {
      EXPECT_TRUE(is_connected(g));
      EXPECT_TRUE(bipartition(g).bipartite());
      EXPECT_TRUE(codes.insert(canonical_code(g)).second);
    }
    for (const Graph& g : chordal_graphs(n)) EXPECT_TRUE(is_chordal(g).chordal());
    for (const Graph& t : trees(n)) EXPECT_TRUE(is_tree(t));
  }
}

// Graphs with equal invariant fingerprints are spot-checked for isomorphism
// by trying relabelings; any hit would be a duplicate.
TEST(Enumeration, DuplicateFreeBySpotCheck) {
  for (int n = 4; n <= 6; ++n) {
    std::map<std::vector<long long>, std::vector<Graph>> buckets;
    for (const Graph& g : all_graphs(n)) buckets[brute::fingerprint(g)].push_back(g);
    for (const auto& [print, group] : buckets) {
      for (std::size_t i = 0; i < group.size(); ++i) {
        for (std::size_t j = i + 1; j < group.size(); ++j) {
          std::vector<Vertex> perm(n);
          std::iota(perm.begin(), perm.end(), 0);
          bool iso = false;
          do {
            std::vector<Edge> mapped;
            for (const Edge& e : group[i].edges()) mapped.emplace_back(perm[e.u], perm[e.v]);
            iso = Graph(n, mapped) == group[j];
          } while (!iso && std::next_permutation(perm.begin(), perm.end()));
          EXPECT_FALSE(iso) << write_graph(group[i]) << "vs\n" << write_graph(group[j]);
        }
      }
    }
  }
}

TEST(Enumeration, CanonicalCodeIsInvariantUnderRelabeling) {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : all_graphs(n)) {
      if (rng() % 8 != 0) continue;
      const Graph h = brute::shuffled(g, rng);
      EXPECT_EQ(canonical_code(h), canonical_code(g));
      EXPECT_EQ(canonical_graph(h), g);
    }
  }
  EXPECT_NE(canonical_code(named::p4()), canonical_code(named::star3()));
}

TEST(Enumeration, SamplerIsReproducible) {
  std::mt19937_64 a(42);
  std::mt19937_64 b(42);
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + i % 13;
    const Graph g = sample_connected_bipartite(n, a);
    EXPECT_EQ(g, sample_connected_bipartite(n, b));
    EXPECT_EQ(g.order(), n);
    EXPECT_TRUE(is_connected(g));
    EXPECT_TRUE(bipartition(g).bipartite());
  }
  std::mt19937_64 rng(1);
  EXPECT_THROW(sample_connected_bipartite(1, rng), Error);
}

TEST(Enumeration, RangeErrors) {
  EXPECT_THROW(all_graphs(9), Error);
  EXPECT_THROW(trees(13), Error);
  EXPECT_THROW(trees(0), Error);
  EXPECT_THROW(enumerate_connected_bipartite(9, [](const Graph&) {}), Error);
}
