#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "scarflab/embedding.hpp"
#include "scarflab/enumerate.hpp"
#include "scarflab/families.hpp"

using namespace scarflab;

TEST(Embedding, Examples) {
  const Graph p9 = make_family(FamilyTag::path(9));
  EXPECT_TRUE(contains_induced(p9, p9));

  const Graph k4 = complete_graph(4);
  const Graph c4 = make_family(FamilyTag::cycle(4));
  EXPECT_TRUE(contains_subgraph(k4, c4));
  EXPECT_FALSE(contains_induced(k4, c4));

  const Graph spider = make_family(FamilyTag::spider5(1, 1, 1));
  const Graph broom = make_family(FamilyTag::broom3(1, 1));
  EXPECT_TRUE(contains_induced(spider, broom));
  EXPECT_EQ(contains_induced(spider, broom), oracle::contains_induced(spider, broom));
}

TEST(Embedding, LargerPatternNeverFits) {
  EXPECT_FALSE(contains_subgraph(make_family(FamilyTag::path(3)), make_family(FamilyTag::path(4))));
  EXPECT_FALSE(contains_induced(make_family(FamilyTag::path(3)), make_family(FamilyTag::path(4))));
}

TEST(Embedding, ReturnedMapIsValid) {
  const Graph host = make_family(FamilyTag::spider6(1, 2, 1));
  const Graph pattern = make_family(FamilyTag::broom4(1, 1));
  const auto image = find_induced_embedding(host, pattern);
  ASSERT_TRUE(image.has_value());
  std::set<int> distinct(image->begin(), image->end());
  EXPECT_EQ(distinct.size(), image->size());
  for (int a = 0; a < pattern.n(); ++a) {
    for (int b = a + 1; b < pattern.n(); ++b) {
      EXPECT_EQ(pattern.has_edge(a, b), host.has_edge((*image)[a], (*image)[b]));
    }
  }
}

TEST(Embedding, CapIsEnforced) {
  EXPECT_THROW(contains_induced(make_family(FamilyTag::path(17)), Graph(1)), Error);
}

// Every pair of small graphs, checked against the exhaustive injection oracle.
TEST(Embedding, MatchesOracleExhaustively) {
  std::vector<Graph> hosts;
  for (int n = 1; n <= 5; ++n) {
    auto level = enumerate_graphs(n);
    hosts.insert(hosts.end(), level.begin(), level.end());
  }
  for (const Graph& g : hosts) {
    for (const Graph& h : hosts) {
      if (h.n() > g.n()) continue;
      ASSERT_EQ(contains_induced(g, h), oracle::contains_induced(g, h));
      ASSERT_EQ(contains_subgraph(g, h), oracle::contains_subgraph(g, h));
    }
  }
}

TEST(Embedding, RandomHostsAgainstOracle) {
  std::mt19937 rng(99);
  const auto patterns = enumerate_connected_graphs(4);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Edge> edges;
    for (int u = 0; u < 7; ++u) {
      for (int v = u + 1; v < 7; ++v) {
        if (rng() % 3 == 0) edges.push_back({u, v});
      }
    }
    const Graph g(7, edges);
    for (const Graph& h : patterns) {
      ASSERT_EQ(contains_induced(g, h), oracle::contains_induced(g, h));
      ASSERT_EQ(contains_subgraph(g, h), oracle::contains_subgraph(g, h));
    }
  }
}
