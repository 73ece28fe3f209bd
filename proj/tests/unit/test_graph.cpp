#include <gtest/gtest.h>

#include <functional>

#include "ifvs/generators.hpp"
#include "ifvs/graph.hpp"
#include "test_graphs.hpp"

namespace ifvs {
namespace {

using testing::complete;
using testing::cycle;
using testing::make_graph;

TEST(MultiGraph, DegreeCountsMultiplicityAndLoopsTwice) {
  MultiGraph g(3);
  g.add_edge(0, 1, 2);
  g.add_edge(1, 1);
  g.add_edge(1, 2);
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_EQ(g.degree(1), 5);
  EXPECT_EQ(g.multiplicity(1, 0), 2);
  EXPECT_TRUE(g.has_loop(1));
  EXPECT_EQ(g.num_edges(), 4u);
}

TEST(MultiGraph, RemovingVertexDropsIncidentEdgesAndKeepsIdsRetired) {
  MultiGraph g = make_graph(3, {{0, 1}, {1, 2}});
  g.remove_vertex(1);
  EXPECT_FALSE(g.contains(1));
  EXPECT_EQ(g.degree(0), 0);
  EXPECT_EQ(g.num_edges(), 0u);
  EXPECT_EQ(g.add_vertex(), 3);
  EXPECT_EQ(g.vertices(), (VertexSet{0, 2, 3}));
}

TEST(MultiGraph, RemoveEdgeReturnsRemovedMultiplicity) {
  MultiGraph g(2);
  g.add_edge(0, 1, 3);
  EXPECT_EQ(g.remove_edge(1, 0), 3);
  EXPECT_EQ(g.remove_edge(0, 1), 0);
}

TEST(MultiGraph, IncidenceListsStaySorted) {
  MultiGraph g(5);
  g.add_edge(2, 4);
  g.add_edge(2, 0);
  g.add_edge(2, 3);
  auto inc = g.incident(2);
  ASSERT_EQ(inc.size(), 3u);
  EXPECT_EQ(inc[0].neighbor, 0);
  EXPECT_EQ(inc[1].neighbor, 3);
  EXPECT_EQ(inc[2].neighbor, 4);
}

TEST(MultiGraph, UnknownVertexThrows) {
  MultiGraph g(2);
  EXPECT_THROW(g.add_edge(0, 5), std::invalid_argument);
  EXPECT_THROW(degree_into(g, 7, {0}), std::invalid_argument);
}

TEST(DegreeInto, Examples) {
  MultiGraph g(2);
  g.add_edge(0, 1, 2);
  EXPECT_EQ(degree_into(g, 0, {1}), 2);
  EXPECT_EQ(degree_into(g, 0, {}), 0);
  MultiGraph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(degree_into(star, 0, {1, 2, 3}), 3);
}

TEST(DegreeInto, LoopCountsTwiceWhenInside) {
  MultiGraph g(2);
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  EXPECT_EQ(degree_into(g, 0, {0}), 2);
  EXPECT_EQ(degree_into(g, 0, {1}), 1);
}

TEST(DegreeInto, AllVerticesGivesDegree) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const MultiGraph g = random_multigraph(8, 14, seed, 100);
    for (Vertex v : g.vertices()) EXPECT_EQ(degree_into(g, v, g.vertices()), g.degree(v));
  }
}

TEST(Components, Examples) {
  MultiGraph path = make_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(components(path, {0, 1, 2}), (std::vector<VertexSet>{{0, 1, 2}}));
  EXPECT_EQ(components(path, {0, 2}), (std::vector<VertexSet>{{0}, {2}}));
  EXPECT_TRUE(components(path, {}).empty());
}

TEST(IsForest, Examples) {
  EXPECT_TRUE(is_forest(make_graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})));
  MultiGraph two(2);
  two.add_edge(0, 1, 2);
  EXPECT_FALSE(is_forest(two));
  MultiGraph loop(1);
  loop.add_edge(0, 0);
  EXPECT_FALSE(is_forest(loop));
  EXPECT_TRUE(is_forest(loop, {}));
}

TEST(IsForest, InducedSubgraphOnly) {
  const MultiGraph c4 = cycle(4);
  EXPECT_FALSE(is_forest(c4));
  EXPECT_TRUE(is_forest(c4, {0, 1, 2}));
}

// Independent cycle detector: DFS that reports a back edge, counting a
// parallel edge or a loop as a cycle.
bool has_cycle_dfs(const MultiGraph& g, const VertexSet& x) {
  std::vector<int> state(g.id_bound(), 0);
  std::function<bool(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    state[static_cast<std::size_t>(v)] = 1;
    for (const Incidence& inc : g.incident(v)) {
      const Vertex w = inc.neighbor;
      if (!contains(x, w)) continue;
      if (w == v || inc.multiplicity > 1) return true;
      if (w == parent) continue;
      if (state[static_cast<std::size_t>(w)] == 1) return true;
      if (state[static_cast<std::size_t>(w)] == 0 && dfs(w, v)) return true;
    }
    state[static_cast<std::size_t>(v)] = 2;
    return false;
  };
  for (Vertex v : x) {
    if (state[static_cast<std::size_t>(v)] == 0 && dfs(v, kNoVertex)) return true;
  }
  return false;
}

TEST(IsForest, AgreesWithDfsOnRandomGraphs) {
  int forests = 0;
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    Rng rng(seed);
    const int n = rng.uniform(1, 12);
    const MultiGraph g = random_multigraph(n, rng.uniform(0, n + 2), rng.next(), 40);
    VertexSet x;
    for (Vertex v : g.vertices()) {
      if (rng.chance(3, 4)) x.push_back(v);
    }
    const bool forest = is_forest(g, x);
    forests += forest ? 1 : 0;
    ASSERT_EQ(forest, !has_cycle_dfs(g, x)) << "seed " << seed;
  }
  EXPECT_GT(forests, 100);
  EXPECT_LT(forests, 1400);
}

TEST(Without, PreservesIds) {
  MultiGraph g = cycle(5);
  MultiGraph h = without(g, {1, 3});
  EXPECT_EQ(h.vertices(), (VertexSet{0, 2, 4}));
  EXPECT_EQ(h.multiplicity(4, 0), 1);
  EXPECT_EQ(h.id_bound(), g.id_bound());
}

TEST(Contract, TriangleBecomesSingleNodeWithoutLoop) {
  Contraction c = contract_components(complete(3), {{0, 1, 2}});
  EXPECT_EQ(c.graph.num_vertices(), 1u);
  EXPECT_EQ(c.graph.num_edges(), 0u);
  EXPECT_FALSE(c.graph.has_loop(0));
}

TEST(Contract, PathPrefix) {
  Contraction c = contract_components(make_graph(3, {{0, 1}, {1, 2}}), {{0, 1}});
  EXPECT_EQ(c.graph.num_vertices(), 2u);
  EXPECT_EQ(c.node_of[0], 0);
  EXPECT_EQ(c.node_of[1], 0);
  EXPECT_EQ(c.node_of[2], 1);
  EXPECT_EQ(c.graph.multiplicity(0, 1), 1);
}

TEST(Contract, SingletonsGiveIsomorphicCopy) {
  const MultiGraph g = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  Contraction c = contract_components(g, {{0}, {1}});
  EXPECT_EQ(c.graph, g);
}

TEST(Contract, RejectsOverlapAndDisconnectedParts) {
  const MultiGraph path = make_graph(3, {{0, 1}, {1, 2}});
  EXPECT_THROW(contract_components(path, {{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(contract_components(path, {{0, 2}}), std::invalid_argument);
}

TEST(Contract, CrossMultiplicityIsPreserved) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const MultiGraph g = random_multigraph(9, 16, rng.next(), 0);
    std::vector<VertexSet> parts = components(g, {0, 1, 2, 3});
    Contraction c = contract_components(g, parts);
    long cross = 0;
    for (const Edge& e : g.edges()) {
      if (c.node_of[static_cast<std::size_t>(e.u)] != c.node_of[static_cast<std::size_t>(e.v)]) {
        cross += e.multiplicity;
      }
    }
    EXPECT_EQ(static_cast<long>(c.graph.num_edges()), cross) << "seed " << seed;
  }
}

TEST(UnionFind, UniteReportsMerges) {
  UnionFind uf(4);
  EXPECT_TRUE(uf.unite(0, 1));
  EXPECT_TRUE(uf.unite(2, 3));
  EXPECT_FALSE(uf.unite(1, 0));
  EXPECT_TRUE(uf.unite(1, 3));
  EXPECT_EQ(uf.find(0), uf.find(2));
}

}  // namespace
}  // namespace ifvs
