#include <gtest/gtest.h>

#include <random>

#include "alphastab/certificates.hpp"
#include "alphastab/enumeration.hpp"
#include "alphastab/generators.hpp"
#include "support/brute.hpp"
#include "support/named.hpp"

using namespace alphastab;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST(Families, Basics) {
  EXPECT_EQ(even_cycle(4), named::make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  const Graph k33 = complete_bipartite(3, 3);
  EXPECT_EQ(k33.size(), 9);
  EXPECT_EQ(require_bipartition(k33).class_a, (VertexSet{0, 1, 2}));
  EXPECT_EQ(path(4), named::make(4, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(code_of([] { even_cycle(5); }), ErrorCode::bad_size);
  EXPECT_EQ(code_of([] { even_cycle(2); }), ErrorCode::bad_size);
  EXPECT_EQ(code_of([] { path(1); }), ErrorCode::bad_size);
  EXPECT_EQ(code_of([] { complete_bipartite(0, 2); }), ErrorCode::bad_size);
}

TEST(Families, RandomTree) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph t = random_tree(12, seed);
    EXPECT_TRUE(is_tree(t));
    EXPECT_EQ(t, random_tree(12, seed));
  }
  EXPECT_TRUE(is_tree(random_tree(2, 1)));
  EXPECT_THROW(random_tree(1, 1), Error);
}

TEST(EarGrowth, SmallTargets) {
  const EarGrowth two = ear_growth(1, 2);
  EXPECT_EQ(two.graph, named::k2());
  EXPECT_TRUE(two.decomposition.ears.empty());

  // From K2 the only possible first ear has two internal vertices.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const EarGrowth four = ear_growth(seed, 4);
    EXPECT_EQ(canonical_code(four.graph), canonical_code(named::c4()));
  }
  EXPECT_THROW(ear_growth(1, 5), Error);
  EXPECT_THROW(ear_growth(1, 0), Error);
}

TEST(EarGrowth, OutputsAreBistableWithWorkingDecomposition) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int target = 2 * (1 + static_cast<int>(seed % 12));
    const EarGrowth g = ear_growth(seed, target);
    EXPECT_EQ(g.graph.order(), target);
    EXPECT_EQ(g.seed, seed);
    EXPECT_TRUE(is_bistable(g.graph).bistable);
    EXPECT_FALSE(check_ear_decomposition(g.graph, g.decomposition).has_value());
    EXPECT_EQ(reconstruct(g.decomposition, target), g.graph);
    for (int i = 0; i <= static_cast<int>(g.decomposition.ears.size()); ++i) {
      EXPECT_TRUE(is_bistable(ear_prefix(g.decomposition, target, i).graph).bistable);
    }
    if (target <= 12) EXPECT_TRUE(brute::bistable(g.graph));
  }
}

TEST(AttachPath, Examples) {
  const Graph c4 = named::c4();
  // Path vertices 4,5; end 4 joins class B vertex 1, end 5 joins class A vertex 0.
  const Construction c = attach_even_path(c4, 2, {{0, 1}, {1, 0}});
  EXPECT_EQ(c.graph.order(), 6);
  EXPECT_TRUE(c.report.bistable.bistable);
  EXPECT_TRUE(brute::bistable(c.graph));

  EXPECT_EQ(code_of([&] { attach_even_path(c4, 2, {{0, 1}}); }), ErrorCode::endpoint_not_attached);
  EXPECT_EQ(code_of([&] { attach_even_path(c4, 3, {{0, 1}, {2, 1}}); }), ErrorCode::parity_violation);
  EXPECT_EQ(code_of([&] { attach_even_path(named::p4(), 2, {{0, 1}, {1, 0}}); }), ErrorCode::not_bistable);
  EXPECT_EQ(code_of([&] { attach_even_path(c4, 2, {{0, 0}, {1, 2}}); }), ErrorCode::not_bipartite);
}

// Breaking the endpoint precondition through the unchecked entry point never
// gives a bistable graph.
TEST(AttachPath, MissingEndpointNeverBistable) {
  for (int n = 2; n <= 6; n += 2) {
    for (const Graph& h : connected_bipartite_graphs(n)) {
      if (!is_bistable(h).bistable) continue;
      for (int k = 2; k <= 6; k += 2) {
        for (Vertex host = 0; host < n; ++host) {
          const Graph g = detail::attach_even_path_unchecked(h, k, {{0, host}});
          EXPECT_FALSE(is_bistable(g).bistable);
          EXPECT_FALSE(brute::bistable(g));
        }
      }
    }
  }
}

TEST(Substitute, Examples) {
  const Construction c = substitute(named::c4(), {named::c4(), named::c4()});
  EXPECT_EQ(c.graph.order(), 8);
  EXPECT_TRUE(c.report.bistable.bistable);
  EXPECT_TRUE(brute::bistable(c.graph));
  // Both cross directions are present: an edge from A of piece 0 to B of
  // piece 1 and one from A of piece 1 to B of piece 0.
  const auto b = require_bipartition(c.graph);
  bool forward = false;
  bool backward = false;
  for (const Edge& e : c.graph.edges()) {
    if ((e.u < 4) == (e.v < 4)) continue;
    const Vertex a = b.in_a(e.u) ? e.u : e.v;
    (a < 4 ? forward : backward) = true;
  }
  EXPECT_TRUE(forward && backward);

  const Construction mixed = substitute(named::c4(), {named::c6(), named::k33()});
  EXPECT_EQ(mixed.graph.order(), 12);
  EXPECT_TRUE(mixed.report.bistable.bistable);

  EXPECT_EQ(code_of([] { substitute(named::k2(), {named::c4()}); }), ErrorCode::bad_size);
  EXPECT_EQ(code_of([] { substitute(named::p4(), {named::c4(), named::c4()}); }), ErrorCode::not_bistable);
  EXPECT_EQ(code_of([] { substitute(named::c4(), {named::c4(), named::p4()}); }), ErrorCode::not_bistable);
  EXPECT_EQ(code_of([] { substitute(named::c4(), {named::c4()}); }), ErrorCode::bad_size);
}

TEST(Substitute, PortChooserIsHonoured) {
  const PortChooser highest = [](int, bool, const VertexSet& c) { return c.back(); };
  const Construction low = substitute(named::c4(), {named::c4(), named::c4()});
  const Construction high = substitute(named::c4(), {named::c4(), named::c4()}, highest);
  EXPECT_NE(low.graph, high.graph);
  EXPECT_TRUE(high.report.bistable.bistable);
}

TEST(Union, Examples) {
  const Construction two = union_connect({named::c4(), named::c4()}, {Edge(0, 5)});
  EXPECT_EQ(two.graph.order(), 8);
  EXPECT_TRUE(two.report.alpha_stable);
  EXPECT_TRUE(brute::alpha_stable(two.graph));

  // C4 then P4 (ids 4..7): both path ends attached, α-stable.
  const Construction joined = union_connect({named::c4(), named::p4()}, {Edge(0, 4), Edge(1, 7)});
  EXPECT_TRUE(joined.report.alpha_stable);
  EXPECT_TRUE(brute::alpha_stable(joined.graph));

  const Construction paths = union_connect({named::p4(), named::p4()}, {Edge(3, 4)});
  EXPECT_TRUE(paths.report.alpha_plus.stable);
  EXPECT_TRUE(brute::alpha_plus(paths.graph));
  EXPECT_FALSE(paths.report.alpha_stable);

  EXPECT_EQ(code_of([] { union_connect({named::c4(), named::c4()}, {}); }), ErrorCode::not_connected);
  EXPECT_EQ(code_of([] { union_connect({named::c4(), named::c4()}, {Edge(0, 4), Edge(1, 4)}); }),
            ErrorCode::not_bipartite);
  EXPECT_EQ(code_of([] { union_connect({}, {}); }), ErrorCode::bad_size);
  EXPECT_EQ(piece_offsets({named::c4(), named::p3(), named::k2()}), (std::vector<Vertex>{0, 4, 7}));
}
