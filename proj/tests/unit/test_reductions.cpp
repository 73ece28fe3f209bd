#include <gtest/gtest.h>

#include <array>
#include <tuple>

#include "ifvs/branching.hpp"
#include "ifvs/generators.hpp"
#include "ifvs/oracle.hpp"
#include "ifvs/reductions.hpp"
#include "test_graphs.hpp"

namespace ifvs {
namespace {

using testing::make_graph;

std::vector<int> rules_of(const ReductionTrace& t) {
  std::vector<int> out;
  for (const FiringRecord& f : t) out.push_back(f.rule);
  return out;
}

TEST(Rule1, DeletesIsolatedVertex) {
  DisInstance inst(MultiGraph(1), {}, {}, 0);
  ReductionOutcome out = apply_rule(inst, 1);
  ASSERT_EQ(out.result, ReductionResult::kReduced);
  EXPECT_EQ(out.pivot, 0);
  EXPECT_EQ(out.instance->graph().num_vertices(), 0u);
}

TEST(Rule1, PeelsPendantPathUntilStable) {
  // Two nice vertices 2, 3 between W-vertices 0 and 1, plus the path 0-4-5-6.
  MultiGraph g = make_graph(7, {{2, 0}, {2, 1}, {3, 0}, {3, 1}, {0, 4}, {4, 5}, {5, 6}});
  FixpointResult fix = reduce_to_fixpoint(DisInstance(g, {0, 1}, {}, 1));
  ASSERT_FALSE(fix.rejected);
  EXPECT_EQ(rules_of(fix.trace), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(fix.trace[0].pivot, 6);
  EXPECT_EQ(fix.trace[1].pivot, 5);
  EXPECT_EQ(fix.trace[2].pivot, 4);
  EXPECT_EQ(fix.instance.graph().vertices(), (VertexSet{0, 1, 2, 3}));
}

TEST(Rule2, DropsTheReservedEndpoint) {
  // W = {0, 3, 4} forms the path 0-4-3; F path 0-1-2-3 with 1 in R.
  MultiGraph g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {3, 4}});
  ReductionOutcome out = apply_rule(DisInstance(g, {0, 3, 4}, {1}, 1), 2);
  ASSERT_EQ(out.result, ReductionResult::kReduced);
  EXPECT_EQ(out.pivot, 1);
  EXPECT_FALSE(out.instance->graph().contains(1));
  EXPECT_EQ(out.instance->graph().multiplicity(2, 0), 1);
}

TEST(Rule2, DropsSmallerIdWhenNeitherOrBothReserved) {
  MultiGraph g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {3, 4}});
  for (const VertexSet& r : {VertexSet{}, VertexSet{1, 2}}) {
    ReductionOutcome out = apply_rule(DisInstance(g, {0, 3, 4}, r, 1), 2);
    ASSERT_EQ(out.result, ReductionResult::kReduced);
    EXPECT_EQ(out.pivot, 1);
    EXPECT_EQ(out.instance->graph().multiplicity(2, 0), 1);
  }
}

TEST(Rule2, BypassMayCreateParallelEdgeIntoW) {
  // 1 and 2 both reach W-vertex 0; bypassing 1 doubles the edge 2-0.
  MultiGraph g = make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 0}});
  DisInstance inst(g, {0}, {}, 1);
  ReductionOutcome out = apply_rule(inst, 2);
  ASSERT_EQ(out.result, ReductionResult::kReduced);
  EXPECT_EQ(out.instance->graph().multiplicity(2, 0), 2);
}

TEST(Rule3, RejectsNegativeBudgetOrMeasure) {
  EXPECT_EQ(apply_rule(DisInstance(MultiGraph(0), {}, {}, -1), 3).result, ReductionResult::kRejectNo);
  MultiGraph g = make_graph(5, {{0, 1}, {1, 2}, {3, 0}, {3, 2}, {4, 0}, {4, 1}, {4, 2}});
  EXPECT_EQ(apply_rule(DisInstance(g, {0, 1, 2}, {}, 0), 3).result, ReductionResult::kRejectNo);
  EXPECT_EQ(apply_rule(DisInstance(g, {0, 1, 2}, {}, 1), 3).result, ReductionResult::kUnchanged);
}

TEST(Rule4, RejectsReservedVertexClosingWCycle) {
  MultiGraph g = make_graph(3, {{0, 1}, {2, 0}, {2, 1}});
  FixpointResult fix = reduce_to_fixpoint(DisInstance(g, {0, 1}, {2}, 3));
  EXPECT_TRUE(fix.rejected);
  EXPECT_EQ(fix.rejecting_rule, 4);
}

TEST(Rule4, MultiplicityTwoCounts) {
  MultiGraph g(2);
  g.add_edge(0, 1, 2);
  EXPECT_EQ(apply_rule(DisInstance(g, {0}, {1}, 3), 4).result, ReductionResult::kRejectNo);
}

TEST(Rule5, DeletesIntoSolutionAndReservesFNeighbours) {
  MultiGraph g = make_graph(4, {{0, 3}, {1, 2}, {2, 3}, {2, 0}});
  g.add_edge(1, 0, 2);
  ReductionOutcome out = apply_rule(DisInstance(g, {0, 3}, {}, 2), 5);
  ASSERT_EQ(out.result, ReductionResult::kReduced);
  EXPECT_EQ(out.forced, (VertexSet{1}));
  EXPECT_EQ(out.instance->budget(), 1);
  EXPECT_FALSE(out.instance->graph().contains(1));
  EXPECT_TRUE(out.instance->in_r(2));
}

TEST(Rule6, MovesReservedVertexWithPotentialNiceNeighbour) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Gadget gadget = ifvs::gadget(GadgetKind::kNiceToW, seed);
    const DisInstance& before = gadget.instance;
    ASSERT_TRUE(before.in_r(gadget.subject));
    for (int rule = 1; rule <= 5; ++rule) {
      ASSERT_EQ(apply_rule(before, rule).result, ReductionResult::kUnchanged) << rule;
    }
    ReductionOutcome out = apply_rule(before, 6);
    ASSERT_EQ(out.result, ReductionResult::kReduced);
    EXPECT_EQ(out.pivot, gadget.subject);
    EXPECT_TRUE(out.instance->in_w(gadget.subject));
    // Each P-nice neighbour turns nice, so eta grows by at least one.
    const Census census(before);
    int pnice = 0;
    for (const Incidence& inc : before.graph().incident(gadget.subject)) {
      if (before.in_f(inc.neighbor) && census.of(inc.neighbor).kind == VertexKind::kPNice) {
        ++pnice;
        EXPECT_EQ(classify(*out.instance, inc.neighbor).kind, VertexKind::kNice);
      }
    }
    EXPECT_GE(pnice, 1);
    EXPECT_GE(measure(*out.instance).eta, measure(before).eta + 1);
    // Claim: the rule followed by the fixpoint does not raise the measure.
    FixpointResult fix = reduce_to_fixpoint(before);
    if (!fix.rejected) EXPECT_LE(measure(fix.instance).mu(), measure(before).mu());
  }
}

TEST(Rule7, ReservesDegreeTwoNeighbours) {
  // 2 has F\R-neighbours 3 and 4, both of degree 2.
  MultiGraph g = make_graph(6, {{2, 0}, {2, 1}, {2, 5}, {2, 3}, {3, 0}, {2, 4}, {4, 1}});
  DisInstance inst(g, {0, 1, 5}, {}, 2);
  ReductionOutcome out = apply_rule(inst, 7);
  ASSERT_EQ(out.result, ReductionResult::kReduced);
  EXPECT_EQ(out.pivot, 2);
  EXPECT_TRUE(out.instance->in_r(3));
  EXPECT_TRUE(out.instance->in_r(4));
}

TEST(Fixpoint, ReducedInstanceIsUnchanged) {
  MultiGraph g = make_graph(4, {{2, 0}, {2, 1}, {3, 0}, {3, 1}});
  DisInstance inst(g, {0, 1}, {}, 1);
  FixpointResult fix = reduce_to_fixpoint(inst);
  EXPECT_FALSE(fix.rejected);
  EXPECT_TRUE(fix.trace.empty());
  EXPECT_EQ(fix.instance.graph(), inst.graph());
}

TEST(Fixpoint, RejectsUnknownRuleId) {
  EXPECT_THROW(apply_rule(DisInstance(MultiGraph(1), {}, {}, 0), 8), std::invalid_argument);
}

DisInstance random_instance(std::uint64_t seed) {
  Rng rng(seed);
  DisParams p;
  p.w_vertices = rng.uniform(0, 8);
  p.f_vertices = rng.uniform(1, 11);
  p.cross_edges = rng.uniform(0, 2 * p.f_vertices);
  p.reserve_permille = rng.uniform(0, 250);
  return random_dis_instance(p, rng.next());
}

struct Potential {
  std::size_t v;
  std::size_t f;
  std::size_t free;
  auto tie() const { return std::tie(v, f, free); }
};

Potential potential(const DisInstance& inst) {
  return {inst.graph().num_vertices(), inst.f_set().size(), inst.deletable_set().size()};
}

// Walks random root-to-leaf paths of the search tree and reports every rule
// firing on the way.
template <typename OnFiring, typename OnFixpoint>
void walk(int instances, std::uint64_t base, OnFiring on_firing, OnFixpoint on_fixpoint) {
  ReduceOptions opt;
  opt.validate_each_step = true;
  opt.observer = on_firing;
  for (int i = 0; i < instances; ++i) {
    Rng rng(base + static_cast<std::uint64_t>(i));
    DisInstance inst = random_instance(rng.next());
    for (;;) {
      FixpointResult fix = reduce_to_fixpoint(inst, opt);
      on_fixpoint(inst, fix);
      if (fix.rejected) break;
      auto pivot = select_pivot(fix.instance);
      if (!pivot) break;
      inst = rng.chance(1, 2) ? branch_delete(fix.instance, pivot->vertex)
                              : branch_to_w(fix.instance, pivot->vertex);
    }
  }
}

TEST(Reductions, EveryFiringPreservesTheAnswer) {
  std::array<int, kNumRules + 1> seen{};
  walk(
      3000, 777,
      [&](const DisInstance& before, const ReductionOutcome& out) {
        ++seen[static_cast<std::size_t>(out.rule)];
        const auto b = oracle_disjoint(before);
        if (out.result == ReductionResult::kRejectNo) {
          EXPECT_FALSE(b) << "rule " << out.rule;
          return;
        }
        const auto a = oracle_disjoint(*out.instance);
        ASSERT_EQ(a.has_value(), b.has_value()) << "rule " << out.rule;
        if (a) EXPECT_EQ(b->size(), a->size() + out.forced.size()) << "rule " << out.rule;
      },
      [](const DisInstance&, const FixpointResult&) {});
  for (int r = 1; r <= kNumRules; ++r) EXPECT_GE(seen[static_cast<std::size_t>(r)], 50) << "rule " << r;
}

TEST(Reductions, PotentialDecreasesAtEveryFiring) {
  walk(
      1500, 4242,
      [](const DisInstance& before, const ReductionOutcome& out) {
        if (out.result != ReductionResult::kReduced) return;
        EXPECT_LT(potential(*out.instance).tie(), potential(before).tie()) << "rule " << out.rule;
      },
      [](const DisInstance&, const FixpointResult&) {});
}

TEST(Reductions, FixpointMeasureNeverIncreases) {
  long checked = 0;
  walk(
      2000, 99,
      [](const DisInstance&, const ReductionOutcome&) {},
      [&](const DisInstance& input, const FixpointResult& fix) {
        if (fix.rejected) return;
        ++checked;
        EXPECT_LE(measure(fix.instance).mu(), measure(input).mu());
        for (int rule = 1; rule <= kNumRules; ++rule) {
          EXPECT_EQ(apply_rule(fix.instance, rule).result, ReductionResult::kUnchanged);
        }
      });
  EXPECT_GT(checked, 1000);
}

TEST(Reductions, SingleStepMeasureForNonTransientRules) {
  // Rules 1, 2, 5 and 7 are expected never to raise mu on their own step;
  // rule 6 may, and is only bounded at the fixpoint.
  std::array<long, kNumRules + 1> raised{};
  std::array<long, kNumRules + 1> fired{};
  walk(
      2000, 5151,
      [&](const DisInstance& before, const ReductionOutcome& out) {
        if (out.result != ReductionResult::kReduced) return;
        ++fired[static_cast<std::size_t>(out.rule)];
        if (measure(*out.instance).mu() > measure(before).mu()) ++raised[static_cast<std::size_t>(out.rule)];
      },
      [](const DisInstance&, const FixpointResult&) {});
  for (int r : {1, 2, 5, 7}) {
    EXPECT_GT(fired[static_cast<std::size_t>(r)], 0) << "rule " << r;
    EXPECT_EQ(raised[static_cast<std::size_t>(r)], 0) << "rule " << r;
  }
}

TEST(MeasureDrop, AroundPTentNeighbour) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Gadget g = gadget(GadgetKind::kTentNeighbor, seed);
    const Vertex v = g.subject;
    const VertexClass c = classify(g.instance, v);
    ASSERT_GE(c.tdeg, 1);
    ASSERT_NE(c.kind, VertexKind::kPNice);

    // Putting v into the solution: the reductions afterwards drop mu by one.
    const DisInstance deleted = branch_delete(g.instance, v);
    FixpointResult a = reduce_to_fixpoint(deleted);
    if (!a.rejected) EXPECT_LE(measure(a.instance).mu(), measure(deleted).mu() - 1) << seed;

    // Moving v into W. The operation may already turn w into a tent, so the
    // drop is measured against the old eta + tau with only v's own change
    // to the W components counted.
    const DisInstance moved = branch_to_w(g.instance, v);
    const Measure old = measure(g.instance);
    const Measure now = measure(moved);
    FixpointResult b = reduce_to_fixpoint(moved);
    if (!b.rejected) {
      EXPECT_LE(measure(b.instance).mu(), old.k + now.rho - (old.eta + old.tau) - 1) << seed;
    }
  }
}

}  // namespace
}  // namespace ifvs
