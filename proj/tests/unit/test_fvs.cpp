#include <gtest/gtest.h>

#include "ifvs/fvs.hpp"
#include "ifvs/generators.hpp"
#include "ifvs/oracle.hpp"
#include "test_graphs.hpp"

namespace ifvs {
namespace {

using testing::complete;
using testing::cycle;
using testing::make_graph;

bool is_cycle_in(const MultiGraph& g, const std::vector<Vertex>& c) {
  if (c.size() == 1) return g.has_loop(c[0]);
  if (c.size() == 2) return g.multiplicity(c[0], c[1]) >= 2;
  VertexSet seen(c.begin(), c.end());
  normalize(seen);
  if (seen.size() != c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (g.multiplicity(c[i], c[(i + 1) % c.size()]) == 0) return false;
  }
  return true;
}

TEST(Fvs, ForestNeedsNothing) {
  MultiGraph g = make_graph(6, {{0, 1}, {1, 2}, {1, 3}, {4, 5}});
  EXPECT_TRUE(min_fvs(g).empty());
  EXPECT_TRUE(shortest_cycle(g).empty());
  EXPECT_EQ(cycle_packing_bound(g), 0);
}

TEST(Fvs, SmallCliques) {
  EXPECT_EQ(min_fvs(complete(3)).size(), 1u);
  EXPECT_EQ(min_fvs(complete(4)).size(), 2u);
  EXPECT_EQ(min_fvs(complete(5)).size(), 3u);
  EXPECT_FALSE(fvs_at_most(complete(5), 2));
  EXPECT_TRUE(fvs_at_most(complete(5), 3));
}

TEST(Fvs, LoopAndDoubleEdge) {
  MultiGraph g(3);
  g.add_edge(0, 0);
  g.add_edge(1, 2, 2);
  EXPECT_EQ(shortest_cycle(g), (std::vector<Vertex>{0}));
  EXPECT_EQ(min_fvs(g).size(), 2u);
  auto s = fvs_at_most(g, 2);
  ASSERT_TRUE(s);
  EXPECT_TRUE(contains(*s, 0));
}

TEST(Fvs, DisjointTriangles) {
  for (int t = 1; t <= 6; ++t) {
    MultiGraph g(static_cast<std::size_t>(3 * t));
    for (int i = 0; i < t; ++i) {
      g.add_edge(3 * i, 3 * i + 1);
      g.add_edge(3 * i + 1, 3 * i + 2);
      g.add_edge(3 * i + 2, 3 * i);
    }
    EXPECT_EQ(cycle_packing_bound(g), t);
    EXPECT_FALSE(fvs_at_most(g, t - 1));
    EXPECT_EQ(min_fvs(g).size(), static_cast<std::size_t>(t));
  }
}

TEST(Fvs, ShortestCycleLength) {
  EXPECT_EQ(shortest_cycle(cycle(7)).size(), 7u);
  MultiGraph g = cycle(8);
  g.add_edge(0, 4);
  auto c = shortest_cycle(g);
  EXPECT_EQ(c.size(), 5u);
  EXPECT_TRUE(is_cycle_in(g, c));
}

TEST(Fvs, NegativeBudget) { EXPECT_FALSE(fvs_at_most(MultiGraph(1), -1)); }

TEST(Fvs, MatchesOracleOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 800; ++seed) {
    Rng rng(seed);
    const int n = rng.uniform(1, 12);
    const MultiGraph g = random_multigraph(n, rng.uniform(0, 3 * n), rng.next());
    const int best = oracle_min_fvs(g);
    const VertexSet m = min_fvs(g);
    ASSERT_EQ(static_cast<int>(m.size()), best) << seed;
    EXPECT_TRUE(is_forest(without(g, m)));
    EXPECT_LE(cycle_packing_bound(g), best);
    EXPECT_FALSE(fvs_at_most(g, best - 1));
    auto at = fvs_at_most(g, best + 1);
    ASSERT_TRUE(at);
    EXPECT_LE(static_cast<int>(at->size()), best + 1);
    EXPECT_TRUE(is_forest(without(g, *at)));
    auto c = shortest_cycle(g);
    EXPECT_EQ(c.empty(), best == 0);
    if (!c.empty()) EXPECT_TRUE(is_cycle_in(g, c)) << seed;
  }
}

TEST(Fvs, PlantedGraphsStayWithinBudget) {
  for (int k = 1; k <= 8; ++k) {
    const PlantedInstance p = planted(80, k, static_cast<std::uint64_t>(k));
    auto s = fvs_at_most(p.graph, k);
    ASSERT_TRUE(s) << k;
    EXPECT_TRUE(is_forest(without(p.graph, *s)));
  }
}

}  // namespace
}  // namespace ifvs
