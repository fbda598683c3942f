#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "support.hpp"
#include "twotree/graph.hpp"
#include "twotree/two_tree_realizer.hpp"

using namespace twotree;

namespace {

SimpleGraph cycle(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

SimpleGraph complete(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace

TEST(SimpleGraph, TriangleIsTheSmallestTwoTree) {
  const SimpleGraph k3 = triangle();
  EXPECT_EQ(k3.vertex_count(), 3u);
  EXPECT_EQ(k3.edge_count(), 3u);
  EXPECT_EQ(degree_sequence(k3), parse_sequence("2,2,2"));
  EXPECT_TRUE(is_two_tree(k3));
}

TEST(SimpleGraph, AttachEar) {
  auto [g, u] = attach_ear(triangle(), 0, 1);
  EXPECT_EQ(u, 3u);
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_EQ(degree_sequence(g), parse_sequence("2,2,3,3"));
  EXPECT_THROW(attach_ear(g, 2, 3), Error);  // 2 and 3 are not adjacent
  try {
    attach_ear(g, 2, 3);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_an_edge);
  }
}

TEST(SimpleGraph, AttachChainKeepsTwoTreeAndEdgeCount) {
  SimpleGraph g = triangle();
  Vertex a = 0;
  Vertex b = 1;
  for (int i = 0; i < 20; ++i) {
    const Vertex u = attach_ears(g, a, b, 1);
    a = b;
    b = u;
    EXPECT_EQ(g.edge_count(), 2 * g.vertex_count() - 3);
    EXPECT_TRUE(is_two_tree(g));
  }
}

TEST(SimpleGraph, EdgeErrors) {
  SimpleGraph g(3);
  g.add_edge(0, 1);
  try {
    g.add_edge(1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::duplicate_edge);
  }
  try {
    g.add_edge(2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::self_loop);
  }
  try {
    g.add_edge(0, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::vertex_out_of_range);
  }
  try {
    g.remove_edge(0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_an_edge);
  }
  g.remove_edge(1, 0);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_FALSE(g.has_edge(0, 1));
}

TEST(SimpleGraph, ConeOverPathIsAFan) {
  SimpleGraph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  const SimpleGraph fan = cone(path);
  EXPECT_EQ(fan.vertex_count(), 5u);
  EXPECT_EQ(fan.degree(4), 4u);
  EXPECT_EQ(degree_sequence(fan), parse_sequence("2 2 3 3 4"));
  EXPECT_TRUE(is_two_tree(fan));
  EXPECT_THROW(cone(cycle(4)), Error);
}

TEST(SimpleGraph, ConeOfEveryTreeIsATwoTree) {
  for (std::size_t n = 2; n <= 7; ++n) {
    reference::for_each_labeled_tree(n, [&](const std::vector<std::pair<int, int>>& edges) {
      SimpleGraph t(n);
      for (auto [u, v] : edges) t.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      ASSERT_TRUE(is_tree(t));
      const SimpleGraph c = cone(t);
      ASSERT_TRUE(is_two_tree(c));
      ASSERT_EQ(c.degree(static_cast<Vertex>(n)), n);
    });
  }
}

TEST(TwoTreeCheck, Examples) {
  SimpleGraph k4_minus(4);
  k4_minus.add_edge(0, 1);
  k4_minus.add_edge(0, 2);
  k4_minus.add_edge(1, 2);
  k4_minus.add_edge(1, 3);
  k4_minus.add_edge(2, 3);
  EXPECT_TRUE(is_two_tree(k4_minus));

  // C4 fails on its edge count before any elimination runs.
  EXPECT_EQ(is_two_tree(cycle(4)).obstruction, Obstruction::wrong_edge_count);

  // A C4 plus a vertex joined to three cycle vertices has 2n-3 edges; its
  // cycle vertex 0 has degree 2 with non-adjacent neighbours 1 and 3.
  SimpleGraph g = cycle(4);
  g.add_vertex();
  g.add_edge(4, 1);
  g.add_edge(4, 2);
  g.add_edge(4, 3);
  ASSERT_EQ(g.edge_count(), 7u);
  EXPECT_EQ(is_two_tree(g).obstruction, Obstruction::non_adjacent_neighbors);

  EXPECT_EQ(is_two_tree(SimpleGraph(2)).obstruction, Obstruction::too_small);
  SimpleGraph split(6);
  for (Vertex base : {0u, 3u}) {
    split.add_edge(base, base + 1);
    split.add_edge(base, base + 2);
    split.add_edge(base + 1, base + 2);
  }
  EXPECT_EQ(is_two_tree(split).obstruction, Obstruction::disconnected);

  // K4 minus nothing: 6 edges on 4 vertices, too many.
  EXPECT_FALSE(is_two_tree(complete(4)));
}

TEST(TwoTreeCheck, NoEarObstruction) {
  // Triangular prism: 3-regular with 2n - 3 edges.
  SimpleGraph g(6);
  for (auto [u, v] : std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}) {
    g.add_edge(u, v);
  }
  ASSERT_EQ(g.edge_count(), 9u);
  EXPECT_EQ(is_two_tree(g).obstruction, Obstruction::no_ear);
}

TEST(TwoTreeCheck, AgreesWithExhaustiveEnumerationProperty) {
  // Reference: a graph is a 2-tree iff its canonical form is in the
  // enumerated level. Checked over every graph with 2n-3 edges.
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto level = enumerate_two_trees(n);
    std::size_t hits = 0;
    reference::for_each_graph(n, 2 * n - 3, [&](const SimpleGraph& g) {
      const bool expected = is_connected(g) && level.count(canonical_form(g)) > 0;
      ASSERT_EQ(static_cast<bool>(is_two_tree(g)), expected);
      hits += expected;
    });
    EXPECT_GT(hits, 0u);
  }
}

TEST(TwoTreeCheck, RandomTwoTreesPassWithStructuralFacts) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 3 + seed % 60;
    const SimpleGraph g = random_two_tree(n, seed);
    const auto check = is_two_tree(g);
    ASSERT_TRUE(check);
    EXPECT_EQ(g.edge_count(), 2 * n - 3);
    const auto d = degree_sequence(g);
    EXPECT_EQ(d.sum(), static_cast<Value>(4 * n - 6));
    EXPECT_EQ(d.min(), 2);
    EXPECT_GE(d.multiplicity(2), 2);
    EXPECT_LE(d.max(), static_cast<Value>(n - 1));
    // Every degree-2 vertex is an ear.
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) != 2) continue;
      auto nb = g.neighbors(v);
      EXPECT_TRUE(g.has_edge(nb[0], nb[1]));
    }
  }
}

TEST(TwoTreeCheck, TraceReplaysToTheSameGraph) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 3 + seed % 40;
    const SimpleGraph g = random_two_tree(n, seed);
    const auto check = is_two_tree(g);
    ASSERT_TRUE(check);
    EXPECT_EQ(check.trace.steps.size(), n - 3);
    EXPECT_EQ(replay(check.trace, n).edges(), g.edges());
  }
}

TEST(TwoTreeCheck, InvariantUnderRelabeling) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 3 + seed % 30;
    const SimpleGraph g = random_two_tree(n, seed);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_TRUE(is_two_tree(reference::relabel(g, perm)));

    // Removing any edge breaks it.
    SimpleGraph broken = g;
    const auto e = g.edges()[rng() % g.edge_count()];
    broken.remove_edge(e.first, e.second);
    EXPECT_FALSE(is_two_tree(broken));
  }
}

TEST(Witness, EarAdjacency) {
  SimpleGraph g = triangle();
  attach_ears(g, 0, 1, 2);  // degrees 4 4 2 2 2
  const auto w = ear_adjacency_witness(g, 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(g.degree(w->first), 4u);
  EXPECT_EQ(g.degree(w->second), 2u);
  EXPECT_TRUE(g.has_edge(w->first, w->second));
  EXPECT_FALSE(ear_adjacency_witness(g, 3));
  EXPECT_THROW(ear_adjacency_witness(cycle(5), 2), Error);
}

TEST(EdgeListIO, WriteIsSortedAndRoundTrips) {
  SimpleGraph g(4);
  g.add_edge(3, 1);
  g.add_edge(2, 0);
  g.add_edge(1, 0);
  std::ostringstream os;
  write_edge_list(os, g);
  EXPECT_EQ(os.str(), "4 3\n0 1\n0 2\n1 3\n");
  std::istringstream is(os.str());
  EXPECT_EQ(read_edge_list(is).edges(), g.edges());
}

TEST(EdgeListIO, ReadSkipsCommentsAndRejectsGarbage) {
  std::istringstream ok("# header comment\n3 3\n\n0 1\n1 2\n# mid\n0 2\nextra trailing text\n");
  EXPECT_TRUE(is_two_tree(read_edge_list(ok)));
  for (const char* bad : {"", "3\n", "3 2\n0 1\n", "3 1\n0 5\n", "3 1\n0 0\n", "3 1\n0 1 2\n", "x y\n"}) {
    std::istringstream is(bad);
    EXPECT_THROW(read_edge_list(is), Error) << bad;
  }
}

TEST(EdgeListIO, Dot) {
  std::ostringstream os;
  write_dot(os, triangle());
  EXPECT_EQ(os.str(), "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
}
