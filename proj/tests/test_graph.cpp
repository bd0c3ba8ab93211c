#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support.hpp"

using namespace zmx;
using zmx::testing::circumference_oracle;

namespace {

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.size(); ++v) d.push_back(g.degree(v));
  return d;
}

}  // namespace

TEST(Graph, RejectsMalformedInput) {
  EXPECT_THROW(Graph(0, {}), Error);
  EXPECT_THROW(Graph(2, {{0, 0}, {0, 1}}), Error);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(Graph(3, {{0, 1}}), Error);
  EXPECT_THROW(Graph(2, {{0, 2}}), Error);
  EXPECT_THROW(Graph(33, {}), Error);
}

TEST(Graph, NormalizesEdgesAndAdjacency) {
  Graph g(4, {{3, 1}, {0, 1}, {2, 1}});
  EXPECT_EQ(g.edges(), (std::vector<Graph::Edge>{{0, 1}, {1, 2}, {1, 3}}));
  EXPECT_EQ(g.neighbors(1), (std::vector<Vertex>{0, 2, 3}));
  EXPECT_TRUE(g.adjacent(3, 1));
  EXPECT_FALSE(g.adjacent(0, 3));
}

TEST(Generators, Path) {
  EXPECT_EQ(build_path(1).edge_count(), 0u);
  EXPECT_EQ(degrees(build_path(4)), (std::vector<int>{1, 2, 2, 1}));
  const Graph p7 = build_path(7);
  EXPECT_EQ(p7.edge_count(), 6u);
  EXPECT_EQ(circumference(p7), 0);
}

TEST(Generators, SquarePath) {
  EXPECT_EQ(build_square_path(3), build_complete(3));
  EXPECT_EQ(build_square_path(18).edge_count(), 33u);
  EXPECT_EQ(circumference(build_square_path(5)), 5);
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(build_square_path(n).edge_count(), std::size_t(n < 2 ? 0 : 2 * n - 3));
}

TEST(Generators, MergedLeafCaterpillar) {
  const Graph a = build_merged_leaf_caterpillar(3, 1, 3);
  EXPECT_EQ(a.size(), 5);
  EXPECT_EQ(circumference(a), 4);
  const Graph b = build_merged_leaf_caterpillar(4, 2, 3);
  EXPECT_EQ(b.degree(b.size() - 1), 2);
  for (int m = 3; m <= 8; ++m)
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        const Graph g = build_merged_leaf_caterpillar(m, i, j);
        EXPECT_EQ(g.size(), 2 * m - 1);
        EXPECT_EQ(circumference_oracle(g), j - i + 2) << m << ' ' << i << ' ' << j;
      }
  EXPECT_THROW(build_merged_leaf_caterpillar(4, 3, 3), Error);
}

TEST(Generators, Fan) {
  EXPECT_EQ(build_fan(2), build_complete(3));
  const Graph f = build_fan(5);
  EXPECT_EQ(f.size(), 6);
  EXPECT_EQ(f.degree(5), 5);
}

TEST(Generators, BipartiteDoubleFan) {
  for (int m = 2; m <= 9; ++m) {
    const Graph g = build_bipartite_double_fan(m);
    EXPECT_EQ(g.size(), m + 2);
    EXPECT_TRUE(is_bipartite(g));
  }
  const Graph g = build_bipartite_double_fan(6);
  EXPECT_EQ(g.degree(6), 3);
  EXPECT_EQ(g.degree(7), 3);
}

TEST(Generators, CircumferencePair) {
  for (int k = 3; k <= 6; ++k) {
    const auto [a, b] = build_circumference_pair(k);
    EXPECT_EQ(circumference_oracle(a), k);
    EXPECT_EQ(circumference_oracle(b), k);
    EXPECT_EQ(circumference(a), k);
    EXPECT_EQ(circumference(b), k);
    if (b.size() <= 11) {
      EXPECT_NE(canonical_code(a), canonical_code(b));
    }
    EXPECT_NE(a.size(), b.size());
  }
  EXPECT_EQ(build_circumference_pair(3).first.size(), 8);
  EXPECT_EQ(build_circumference_pair(3).second.size(), 9);
}

TEST(Generators, CliqueWithTwoLeaves) {
  for (int n = 6; n <= 9; ++n) {
    const Graph g = build_clique_two_leaves(n);
    EXPECT_EQ(g.degree(n - 1), n - 5);
    EXPECT_EQ(g.degree(n - 3), 1);
    EXPECT_EQ(g.degree(n - 2), 1);
    for (Vertex c = 0; c < n - 3; ++c) EXPECT_EQ(g.degree(c), n - 3) << n << ' ' << c;
  }
}

TEST(Analysis, CircumferenceMatchesOracleOnSmallGraphs) {
  for (int n = 1; n <= 6; ++n)
    for_each_connected_graph(n, false, [](const Graph& g) {
      ASSERT_EQ(circumference(g), circumference_oracle(g)) << to_text(g);
    });
}

TEST(Analysis, CircumferenceMatchesOracleOnRandomGraphs) {
  std::mt19937 rng(7);
  for (int round = 0; round < 400; ++round) {
    const int n = 7 + round % 4;
    const Graph g = zmx::testing::random_connected(rng, n, 0.1 + 0.1 * (round % 5));
    ASSERT_EQ(circumference(g), circumference_oracle(g)) << to_text(g);
  }
}

TEST(Analysis, Classify) {
  EXPECT_TRUE(classify(build_path(5)).is_tree);
  EXPECT_TRUE(classify(build_path(5)).is_square_path == false);
  EXPECT_FALSE(classify(build_complete(3)).is_bipartite);
  EXPECT_TRUE(classify(build_cycle(6)).is_bipartite);
  EXPECT_TRUE(classify(build_square_path(7)).is_square_path);
  EXPECT_FALSE(classify(build_square_path(7)).is_tree);
}

TEST(Analysis, SquarePathRecognitionAgreesWithIsomorphism) {
  std::mt19937 rng(11);
  for (int n = 4; n <= 10; ++n) {
    const std::uint64_t code = canonical_code(build_square_path(n));
    for (int round = 0; round < 20; ++round) {
      const Graph h = build_square_path(n).permuted(zmx::testing::random_permutation(rng, n));
      EXPECT_TRUE(is_square_path(h));
      const Graph r = zmx::testing::random_connected(rng, n, 0.25);
      EXPECT_EQ(is_square_path(r), canonical_code(r) == code) << to_text(r);
    }
  }
}

TEST(Analysis, CanonicalCodeIsRelabelingInvariant) {
  std::mt19937 rng(3);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + round % 9;
    const Graph g = zmx::testing::random_connected(rng, n, 0.3);
    const Graph h = g.permuted(zmx::testing::random_permutation(rng, n));
    EXPECT_EQ(canonical_code(g), canonical_code(h));
  }
  EXPECT_NE(canonical_code(build_path(4)), canonical_code(build_star(3)));
}

TEST(Enumerate, TreeCountsFollowCayley) {
  EXPECT_EQ(enumerate_trees(1).size(), 1u);
  EXPECT_EQ(enumerate_trees(3).size(), 3u);
  EXPECT_EQ(enumerate_trees(5).size(), 125u);
  for (int n = 2; n <= 7; ++n) {
    std::size_t expect = 1;
    for (int i = 0; i < n - 2; ++i) expect *= n;
    const auto trees = enumerate_trees(n);
    EXPECT_EQ(trees.size(), expect);
    for (const auto& t : trees) ASSERT_TRUE(is_tree(t));
  }
}

TEST(Enumerate, ConnectedCountsMatchUnionFindOracle) {
  const std::vector<long> expect{1, 1, 4, 38, 728};
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(zmx::testing::count_connected_oracle(n), expect[n - 1]);
    EXPECT_EQ(static_cast<long>(enumerate_connected_graphs(n).size()), expect[n - 1]);
  }
  // 26704 from the oracle, frozen.
  EXPECT_EQ(enumerate_connected_graphs(6).size(), 26704u);
}

TEST(Enumerate, UniqueKeepsOnePerIsomorphismClass) {
  const std::vector<std::size_t> expect{1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> codes;
    for (const auto& g : enumerate_connected_graphs(n)) codes.insert(canonical_code(g));
    EXPECT_EQ(codes.size(), expect[n - 1]);
    EXPECT_EQ(enumerate_connected_graphs(n, true).size(), expect[n - 1]);
  }
}

TEST(GraphIo, RoundTripAndComments) {
  const Graph g = build_square_path(6);
  EXPECT_EQ(parse_graph(to_text(g)), g);
  EXPECT_EQ(parse_graph("# a comment\n3 2\n0 1\n\n1 2\n"), build_path(3));
  EXPECT_EQ(to_text(build_path(3)), "3 2\n0 1\n1 2\n");
  EXPECT_THROW(parse_graph("3 2\n0 1\n"), Error);
  EXPECT_THROW(parse_graph("x\n"), Error);
  EXPECT_THROW(parse_graph(""), Error);
}

TEST(GraphIo, DotFillsColors) {
  std::ostringstream os;
  write_dot(os, build_path(3), {1, 0, 9});
  const std::string dot = os.str();
  EXPECT_NE(dot.find("0 [label=\"0:1\" fillcolor=\"red\"]"), std::string::npos);
  EXPECT_NE(dot.find("1 [label=\"1:0\" fillcolor=\"white\"]"), std::string::npos);
  EXPECT_NE(dot.find("2 [label=\"2:9\" fillcolor=\"red\"]"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
}

TEST(Corpus, ParsesAndEnumerates) {
  EXPECT_EQ(load_corpus("trees:n<=4").size(), 1u + 1 + 3 + 16);
  EXPECT_EQ(load_corpus("trees:n==5").front().id, "tree-n5-0");
  EXPECT_EQ(load_corpus("connected:n==4").size(), 38u);
  EXPECT_EQ(load_corpus("connected:n<=5:unique").size(), 1u + 1 + 2 + 6 + 21);
  for (const auto& g : load_corpus("connected:n<=6:circ<=3")) EXPECT_LE(circumference(g.graph), 3);
  const auto sq = load_corpus("squarepath:2..4");
  ASSERT_EQ(sq.size(), 3u);
  EXPECT_EQ(sq[2].id, "squarepath-4");
  EXPECT_EQ(load_corpus("paths:1..3")[0].id, "path-1");
  EXPECT_THROW(parse_corpus("trees:n<=4:unique"), Error);
  EXPECT_THROW(parse_corpus("connected:n<=9"), Error);
  EXPECT_THROW(parse_corpus("squarepath:5..2"), Error);
  EXPECT_THROW(parse_corpus("bogus"), Error);
}
