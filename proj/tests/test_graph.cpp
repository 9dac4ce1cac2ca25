#include <tyfam/graph.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace tyfam;

TEST(PartSpec, SortsAndValidates) {
  EXPECT_EQ(PartSpec({6, 2, 3}).parts(), (std::vector<int>{2, 3, 6}));
  EXPECT_THROW(PartSpec(std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(PartSpec({2, 0, 3}), std::invalid_argument);
  EXPECT_THROW(PartSpec({-1}), std::invalid_argument);
}

TEST(PartSpec, Parse) {
  EXPECT_EQ(PartSpec::parse("2,3,6"), (PartSpec{2, 3, 6}));
  EXPECT_EQ(PartSpec::parse(" 6 , 2,3"), (PartSpec{2, 3, 6}));
  EXPECT_EQ(PartSpec::parse("5").to_string(), "5");
  EXPECT_THROW(PartSpec::parse(""), std::invalid_argument);
  EXPECT_THROW(PartSpec::parse("2,,3"), std::invalid_argument);
  EXPECT_THROW(PartSpec::parse("2,x"), std::invalid_argument);
  EXPECT_THROW(PartSpec::parse("2,3.5"), std::invalid_argument);
  EXPECT_THROW(PartSpec::parse("0,3"), std::invalid_argument);
}

TEST(Graph, BasicInvariants) {
  Graph g(70);  // spans two words per row
  g.add_edge(0, 69);
  g.add_edge(3, 64);
  EXPECT_TRUE(g.adjacent(69, 0));
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_THROW(g.add_edge(4, 4), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 70), std::out_of_range);
  g.remove_edge(0, 69);
  EXPECT_FALSE(g.adjacent(0, 69));
}

TEST(Graph, WithoutVertexCompacts) {
  auto g = Graph::from_edges(4, {{0, 1}, {1, 3}, {2, 3}});
  auto h = g.without_vertex(1);
  EXPECT_EQ(h.order(), 3u);
  EXPECT_EQ(h.edges(), (std::vector<std::pair<Vertex, Vertex>>{{1, 2}}));
}

TEST(CompleteMultipartite, Examples) {
  auto g = complete_multipartite({1, 3, 3});
  EXPECT_EQ(g.order(), 7u);
  EXPECT_EQ(g.size(), 15u);

  auto h = complete_multipartite({3, 3, 9});
  EXPECT_EQ(h.order(), 15u);
  EXPECT_EQ(h.size(), 63u);

  auto e = complete_multipartite({5});
  EXPECT_EQ(e.order(), 5u);
  EXPECT_EQ(e.size(), 0u);
}

TEST(CompleteMultipartite, SizeFormulaUpToThirty) {
  for (const auto& spec : support::all_specs(30)) {
    std::size_t sum = 0, squares = 0;
    for (int a : spec.parts()) {
      sum += a;
      squares += static_cast<std::size_t>(a) * a;
    }
    auto g = complete_multipartite(spec);
    ASSERT_EQ(g.order(), sum);
    ASSERT_EQ(g.size(), (sum * sum - squares) / 2) << spec.to_string();
  }
}

TEST(Triangles, Examples) {
  EXPECT_TRUE(triangles(complete_multipartite({3, 3})).empty());
  auto k4 = triangles(complete_graph(4));
  EXPECT_EQ(k4, (std::vector<Triangle>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
  EXPECT_EQ(triangles(complete_multipartite({2, 2, 4})).size(), 16u);
}

TEST(Triangles, TripartiteCountIsProductOfParts) {
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 5; ++b)
      for (int c = b; c <= 6; ++c)
        EXPECT_EQ(triangles(complete_multipartite({a, b, c})).size(),
                  static_cast<std::size_t>(a * b * c));
  for (int x = 1; x <= 6; ++x)
    for (int y = x; y <= 7; ++y)
      EXPECT_TRUE(triangles(complete_multipartite({x, y})).empty());
}

TEST(Triangles, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = support::random_graph(rng, 3 + trial % 15, 0.5);
    std::vector<Triangle> expect;
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        for (Vertex c = b + 1; c < n; ++c)
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c))
            expect.push_back({a, b, c});
    ASSERT_EQ(triangles(g), expect);
  }
}

TEST(EligibleY, Examples) {
  EXPECT_TRUE(eligible_y_vertices(complete_graph(4)).empty());
  EXPECT_EQ(eligible_y_vertices(complete_multipartite({3, 3})),
            (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
}

TEST(EligibleY, PetersenIsCubicAndTriangleFree) {
  auto p = support::petersen();
  for (Vertex v = 0; v < 10; ++v)
    ASSERT_EQ(p.degree(v), 3u);
  ASSERT_TRUE(triangles(p).empty());
  std::vector<Vertex> all(10);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(eligible_y_vertices(p), all);
}
