#include <gtest/gtest.h>

#include "ifvs/errors.hpp"
#include "ifvs/fvs.hpp"
#include "ifvs/generators.hpp"
#include "ifvs/oracle.hpp"
#include "ifvs/pipeline.hpp"
#include "test_graphs.hpp"

namespace ifvs {
namespace {

using testing::complete;
using testing::cycle;
using testing::make_graph;

std::optional<std::size_t> min_size(const MultiGraph& g, int k) {
  SolveOptions opt;
  opt.minimize = true;
  auto r = solve_ifvs(g, k, opt);
  if (!r.solution) return std::nullopt;
  return r.solution->size();
}

TEST(Pipeline, TriangleNeedsOneVertex) {
  EXPECT_EQ(min_size(cycle(3), 1), 1u);
  EXPECT_FALSE(solve_ifvs(cycle(3), 0).solution);
}

TEST(Pipeline, CompleteGraphsHaveNoIndependentFvs) {
  for (int n = 4; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_FALSE(solve_ifvs(complete(n), k).solution) << n << " " << k;
  }
}

TEST(Pipeline, ForestNeedsNothing) {
  auto r = solve_ifvs(make_graph(4, {{0, 1}, {1, 2}, {1, 3}}), 0);
  ASSERT_TRUE(r.solution);
  EXPECT_TRUE(r.solution->empty());
  EXPECT_EQ(r.stats.fvs_size, 0);
}

TEST(Pipeline, LoopForcesItsVertex) {
  MultiGraph g = make_graph(3, {{0, 1}, {1, 2}});
  g.add_edge(1, 1);
  auto r = solve_ifvs(g, 1);
  ASSERT_TRUE(r.solution);
  EXPECT_EQ(*r.solution, (VertexSet{1}));
}

TEST(Pipeline, AdjacentLoopsAreNo) {
  MultiGraph g = make_graph(2, {{0, 1}});
  g.add_edge(0, 0);
  g.add_edge(1, 1);
  EXPECT_FALSE(solve_ifvs(g, 2).solution);
}

TEST(Pipeline, DoubleEdgeNeedsAnEndpoint) {
  MultiGraph g(2);
  g.add_edge(0, 1, 2);
  auto r = solve_ifvs(g, 1);
  ASSERT_TRUE(r.solution);
  EXPECT_EQ(r.solution->size(), 1u);
}

TEST(Pipeline, NegativeBudgetThrows) {
  EXPECT_THROW(solve_ifvs(cycle(3), -1), std::invalid_argument);
}

TEST(Pipeline, ExternalSetMustBeFvs) {
  SolveOptions opt;
  opt.external_fvs = VertexSet{};
  EXPECT_THROW(solve_ifvs(cycle(4), 2, opt), std::invalid_argument);
  opt.external_fvs = VertexSet{0, 2};
  auto r = solve_ifvs(cycle(4), 2, opt);
  ASSERT_TRUE(r.solution);
  EXPECT_EQ(r.stats.fvs_size, 2);
}

TEST(Pipeline, SubdividedK5NeedsThree) {
  MultiGraph h = subdivide_once(complete(5));
  EXPECT_EQ(min_size(h, 5), 3u);
  EXPECT_FALSE(solve_ifvs(h, 2).solution);
}

TEST(Pipeline, SubdivisionKeepsIdsAndRemovesLoops) {
  MultiGraph g = make_graph(2, {{0, 1}, {0, 1}});
  g.add_edge(1, 1);
  MultiGraph h = subdivide_once(g);
  EXPECT_EQ(h.num_vertices(), 2u + 2u + 2u);
  EXPECT_EQ(h.degree(0), 2);
  EXPECT_EQ(h.degree(1), 4);
  for (Vertex v : h.vertices()) EXPECT_FALSE(h.has_loop(v));
  for (const Edge& e : h.edges()) EXPECT_EQ(e.multiplicity, 1);
}

TEST(Pipeline, MatchesOracleOnRandomMultigraphs) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const int n = rng.uniform(1, 10);
    const MultiGraph g = random_multigraph(n, rng.uniform(0, 2 * n), rng.next());
    const auto expect = oracle_ifvs(g, n);
    const auto got = min_size(g, n);
    ASSERT_EQ(expect.has_value(), got.has_value()) << "seed " << seed;
    if (expect) {
      ASSERT_EQ(expect->size(), *got) << "seed " << seed;
      const int k = static_cast<int>(expect->size());
      EXPECT_TRUE(solve_ifvs(g, k).solution) << "seed " << seed;
      if (k > 0) EXPECT_FALSE(solve_ifvs(g, k - 1).solution) << "seed " << seed;
    }
  }
}

TEST(Pipeline, ThreadCountDoesNotChangeResult) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const PlantedInstance p = planted(24, 4, seed);
    for (bool minimize : {false, true}) {
      SolveOptions one;
      one.minimize = minimize;
      SolveOptions four = one;
      four.threads = 4;
      EXPECT_EQ(solve_ifvs(p.graph, 4, one).solution, solve_ifvs(p.graph, 4, four).solution)
          << "seed " << seed;
    }
  }
}

TEST(Pipeline, PlantedWitnessIsAnUpperBound) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PlantedInstance p = planted(30, 5, seed);
    ASSERT_TRUE(check_solution(p.graph, p.witness, 5));
    SolveOptions opt;
    opt.minimize = true;
    auto r = solve_ifvs(p.graph, 5, opt);
    ASSERT_TRUE(r.solution);
    EXPECT_LE(r.solution->size(), 5u);
    EXPECT_EQ(r.stats.leaf_bound_violations, 0);
    EXPECT_EQ(r.stats.vector_violations, 0);
  }
}

TEST(Pipeline, TraceHasOneEntryPerTriedGuess) {
  SolveOptions opt;
  opt.minimize = true;
  opt.record_trace = true;
  auto r = solve_ifvs(planted(16, 3, 7).graph, 3, opt);
  EXPECT_EQ(static_cast<long>(r.guesses.size()), r.stats.guesses_tried);
  for (const GuessTrace& gt : r.guesses) {
    EXPECT_EQ(static_cast<long>(gt.trace.nodes.size()), gt.stats.nodes);
  }
}

}  // namespace
}  // namespace ifvs
