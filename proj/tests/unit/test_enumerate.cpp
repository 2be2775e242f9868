#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scarflab/canonical.hpp"
#include "scarflab/enumerate.hpp"

using namespace scarflab;

namespace {

std::set<std::string> forms(const std::vector<Graph>& graphs) {
  std::set<std::string> out;
  for (const Graph& g : graphs) out.insert(canonical_form(g).bytes);
  return out;
}

}  // namespace

TEST(Enumerate, KnownCounts) {
  const std::size_t all[] = {1, 2, 4, 11, 34, 156, 1044};
  const std::size_t connected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(enumerate_graphs(n).size(), all[n - 1]) << n;
    EXPECT_EQ(enumerate_connected_graphs(n).size(), connected[n - 1]) << n;
  }
}

TEST(Enumerate, SmallCases) {
  const auto three = enumerate_connected_graphs(3);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three[0].edge_count() + three[1].edge_count(), 5);
}

TEST(Enumerate, EighteenNonTreesOnFiveVertices) {
  std::size_t non_trees = 0;
  for (const Graph& g : enumerate_connected_graphs(5)) non_trees += is_tree(g) ? 0 : 1;
  EXPECT_EQ(non_trees, 18u);
}

TEST(Enumerate, MatchesLabeledBruteForce) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(forms(enumerate_connected_graphs(n)), forms(oracle::all_graphs_up_to_iso(n, true))) << n;
    EXPECT_EQ(forms(enumerate_graphs(n)), forms(oracle::all_graphs_up_to_iso(n, false))) << n;
  }
}

TEST(Enumerate, OutputIsCanonicalAndSorted) {
  const auto graphs = enumerate_connected_graphs(6);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    EXPECT_EQ(graphs[i], canonical_graph(graphs[i]));
    if (i > 0) EXPECT_LT(canonical_form(graphs[i - 1]), canonical_form(graphs[i]));
  }
}

TEST(Enumerate, TreeCounts) {
  const std::size_t trees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(enumerate_trees(n).size(), trees[n - 1]) << n;
}

TEST(Enumerate, TreesAreTheConnectedGraphsWithFewestEdges) {
  for (int n = 1; n <= 7; ++n) {
    std::vector<Graph> from_connected;
    for (const Graph& g : enumerate_connected_graphs(n)) {
      if (g.edge_count() == n - 1) from_connected.push_back(g);
    }
    EXPECT_EQ(forms(enumerate_trees(n)), forms(from_connected));
  }
}

TEST(Enumerate, CapsAreEnforced) {
  EXPECT_THROW(enumerate_connected_graphs(8), Error);
  EXPECT_THROW(enumerate_connected_graphs(0), Error);
  EXPECT_THROW(enumerate_trees(11), Error);
}
