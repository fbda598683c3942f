#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

#include "support.hpp"
#include "twotree/oracle.hpp"

using namespace twotree;

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_two_trees(3).size(), 1u);
  EXPECT_EQ(enumerate_two_trees(4).size(), 1u);
  EXPECT_EQ(enumerate_two_trees(5).size(), 2u);
  // Unlabeled 2-tree counts (OEIS A054581): 1, 1, 2, 5, 12, 39, 136.
  EXPECT_EQ(enumerate_two_trees(6).size(), 5u);
  EXPECT_EQ(enumerate_two_trees(7).size(), 12u);
  EXPECT_EQ(enumerate_two_trees(8).size(), 39u);
  EXPECT_EQ(enumerate_two_trees(9).size(), 136u);
}

TEST(Enumerate, Bounds) {
  EXPECT_THROW(enumerate_two_trees(2), Error);
  EXPECT_THROW(enumerate_two_trees(kMaxEnumerationOrder + 1), Error);
  EXPECT_GE(kMaxEnumerationOrder, 9u);
}

TEST(Enumerate, SameResultForAnyThreadCount) {
  EXPECT_EQ(enumerate_two_trees(8, 1), enumerate_two_trees(8, 3));
}

TEST(Enumerate, EveryMemberIsATwoTree) {
  for (std::size_t n = 3; n <= 9; ++n) {
    for (const auto& c : enumerate_two_trees(n)) {
      const SimpleGraph g = c.to_graph();
      EXPECT_EQ(g.vertex_count(), n);
      EXPECT_TRUE(is_two_tree(g));
      EXPECT_EQ(canonical_form(g), c);
    }
  }
}

TEST(Enumerate, CompleteAgainstAllGraphs) {
  // Reference: canonical forms of every labeled graph on n vertices that is
  // connected and survives a naive ear-removal search.
  std::function<bool(const SimpleGraph&)> naive = [&](const SimpleGraph& g) -> bool {
    const std::size_t n = g.vertex_count();
    if (n == 3) return g.edge_count() == 3;
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) != 2) continue;
      auto nb = g.neighbors(v);
      if (!g.has_edge(nb[0], nb[1])) continue;
      SimpleGraph h(n - 1);
      for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        h.add_edge(a > v ? a - 1 : a, b > v ? b - 1 : b);
      }
      if (naive(h)) return true;
    }
    return false;
  };
  for (std::size_t n = 3; n <= 7; ++n) {
    std::set<CanonicalGraph> expected;
    reference::for_each_graph(n, 2 * n - 3, [&](const SimpleGraph& g) {
      if (naive(g)) expected.insert(canonical_form(g));
    });
    EXPECT_EQ(enumerate_two_trees(n), expected) << n;
  }
}

TEST(Enumerate, RemovingAnEarLandsOnThePreviousLevel) {
  for (std::size_t n = 4; n <= 9; ++n) {
    const auto prev = enumerate_two_trees(n - 1);
    for (const auto& c : enumerate_two_trees(n)) {
      const SimpleGraph g = c.to_graph();
      for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != 2) continue;
        SimpleGraph h(n - 1);
        for (auto [a, b] : g.edges()) {
          if (a == v || b == v) continue;
          h.add_edge(a > v ? a - 1 : a, b > v ? b - 1 : b);
        }
        EXPECT_EQ(prev.count(canonical_form(h)), 1u);
      }
    }
  }
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937_64 rng(17);
  for (std::size_t n = 3; n <= 10; ++n) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const SimpleGraph g = random_two_tree(n, seed * 31 + n);
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(canonical_form(reference::relabel(g, perm)), canonical_form(g));
    }
  }
}

TEST(CanonicalForm, SeparatesNonIsomorphicGraphs) {
  // Two non-isomorphic 7-vertex 2-trees share the sequence 2^3 3 4^2 5.
  std::size_t same = 0;
  for (const auto& c : enumerate_two_trees(7)) same += degree_sequence(c.to_graph()) == parse_sequence("2^3 3 4^2 5");
  EXPECT_EQ(same, 2u);
  // C6 and two disjoint triangles: all degrees 2, different forms.
  SimpleGraph c6(6);
  for (Vertex v = 0; v < 6; ++v) c6.add_edge(v, (v + 1) % 6);
  SimpleGraph tt(6);
  for (Vertex b : {0u, 3u}) {
    tt.add_edge(b, b + 1);
    tt.add_edge(b, b + 2);
    tt.add_edge(b + 1, b + 2);
  }
  EXPECT_NE(canonical_form(c6), canonical_form(tt));
}

TEST(Census, Examples) {
  EXPECT_EQ(degree_census(3), (std::set<DegreeSequence>{parse_sequence("2,2,2")}));
  EXPECT_EQ(degree_census(4), (std::set<DegreeSequence>{parse_sequence("2,2,3,3")}));
  EXPECT_EQ(degree_census(5), (std::set<DegreeSequence>{parse_sequence("2,2,2,4,4"), parse_sequence("2,2,3,3,4")}));
}

TEST(Census, EqualsAcceptedSequences) {
  for (std::size_t n = 3; n <= 9; ++n) {
    EXPECT_EQ(degree_census(n), reference::accepted_sequences(n)) << n;
  }
}

TEST(SequencesWithSum, AllMultisets) {
  const auto all = sequences_with_sum(3, 6, 1, 4);
  // {1,1,4}, {1,2,3}, {2,2,2}
  EXPECT_EQ(all.size(), 3u);
  for (const auto& d : all) {
    EXPECT_EQ(d.size(), 3);
    EXPECT_EQ(d.sum(), 6);
  }
  EXPECT_TRUE(sequences_with_sum(2, 100, 1, 5).empty());
}
