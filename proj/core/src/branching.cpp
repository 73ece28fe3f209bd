#include "ifvs/branching.hpp"

#include <algorithm>
#include <map>

#include "ifvs/errors.hpp"

namespace ifvs {

const char* to_string(PivotCase c) {
  switch (c) {
    case PivotCase::kA: return "A";
    case PivotCase::kB: return "B";
    case PivotCase::kC: return "C";
  }
  return "?";
}

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::kBranch: return "branch";
    case NodeKind::kBaseCase: return "base-case";
    case NodeKind::kRejected: return "rejected";
  }
  return "?";
}

const char* to_string(EdgeLabel l) {
  switch (l) {
    case EdgeLabel::kRoot: return "root";
    case EdgeLabel::kDelete: return "delete";
    case EdgeLabel::kToW: return "to-w";
  }
  return "?";
}

std::optional<PivotChoice> select_pivot(const DisInstance& inst) {
  return select_pivot(inst, Census(inst));
}

std::optional<PivotChoice> select_pivot(const DisInstance& inst, const Census& census) {
  const VertexSet f = inst.f_set();
  auto eligible = [&](Vertex v) {
    VertexKind kind = census.of(v).kind;
    return kind != VertexKind::kNice && kind != VertexKind::kTent && kind != VertexKind::kPNice;
  };
  auto first = [&](auto&& holds) -> Vertex {
    for (Vertex v : f) {
      if (eligible(v) && holds(census.of(v))) return v;
    }
    return kNoVertex;
  };
  std::optional<PivotChoice> choice;
  if (Vertex v = first([](const VertexClass& c) { return c.gdeg >= 3; }); v != kNoVertex) {
    choice = PivotChoice{v, PivotCase::kA};
  } else if (Vertex v = first([](const VertexClass& c) { return c.gdeg >= 1 && c.tdeg >= 1; });
             v != kNoVertex) {
    choice = PivotChoice{v, PivotCase::kB};
  } else if (Vertex v = first([](const VertexClass& c) { return c.tdeg >= 2; }); v != kNoVertex) {
    choice = PivotChoice{v, PivotCase::kC};
  }
  if (choice && inst.in_r(choice->vertex)) {
    throw InternalError("pivot " + std::to_string(choice->vertex) +
                        " lies in R; rule 6 should have moved it");
  }
  return choice;
}

DisInstance branch_delete(const DisInstance& inst, Vertex v) {
  if (!inst.deletable(v)) throw InternalError("branch_delete: pivot is not in F \\ R");
  DisInstance next = inst;
  for (const Incidence& inc : inst.graph().incident(v)) {
    if (inc.neighbor != v && next.in_f(inc.neighbor)) next.reserve(inc.neighbor);
  }
  next.delete_vertex(v);
  next.set_budget(next.budget() - 1);
  return next;
}

DisInstance branch_to_w(const DisInstance& inst, Vertex v) {
  if (!inst.deletable(v)) throw InternalError("branch_to_w: pivot is not in F \\ R");
  Census census(inst);
  std::map<int, int> hits;
  for (const Incidence& inc : inst.graph().incident(v)) {
    if (!inst.in_w(inc.neighbor)) continue;
    if ((hits[census.w_component(inc.neighbor)] += inc.multiplicity) >= 2) {
      throw InternalError("branch_to_w: pivot has two edges into one W-component");
    }
  }
  DisInstance next = inst;
  next.move_to_w(v);
  return next;
}

std::optional<int> BranchTrace::drop(const TraceNode& parent, int child) const {
  const TraceNode& c = nodes.at(static_cast<std::size_t>(child));
  if (c.kind == NodeKind::kRejected) return std::nullopt;
  return parent.mu - c.mu;
}

namespace {

// (1,2) check on a pair of child drops; nullopt means the child was rejected.
bool vector_ok(std::optional<int> a, std::optional<int> b) {
  constexpr int kRejected = 1 << 20;
  int x = a.value_or(kRejected);
  int y = b.value_or(kRejected);
  return std::min(x, y) >= 1 && std::max(x, y) >= 2;
}

}  // namespace

bool BranchTrace::branching_vector_ok(const TraceNode& node) const {
  if (node.kind != NodeKind::kBranch) return true;
  return vector_ok(drop(node, node.delete_child), drop(node, node.w_child));
}

EngineStats& EngineStats::operator+=(const EngineStats& o) {
  nodes += o.nodes;
  internal_nodes += o.internal_nodes;
  leaves += o.leaves;
  rejected_leaves += o.rejected_leaves;
  mu0 = std::max(mu0, o.mu0);
  max_mu = std::max(max_mu, o.max_mu);
  max_depth = std::max(max_depth, o.max_depth);
  vector_violations += o.vector_violations;
  base_fallbacks += o.base_fallbacks;
  return *this;
}

namespace {

bool better(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

VertexSet merged(VertexSet a, const VertexSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  return normalize(a);
}

class Engine {
 public:
  explicit Engine(const EngineOptions& options) : options_(options) {
    reduce_.validate_each_step = options.validate_each_step;
    reduce_.observer = options.firing_observer;
  }

  struct Outcome {
    std::optional<VertexSet> solution;
    int mu = 0;
    bool rejected = false;
  };

  Outcome visit(DisInstance inst, EdgeLabel label, int parent, int depth) {
    FixpointResult fix = reduce_to_fixpoint(std::move(inst), reduce_);
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);

    int index = -1;
    if (options_.record_trace) {
      index = static_cast<int>(trace_.nodes.size());
      TraceNode node;
      node.label = label;
      node.parent = parent;
      node.depth = depth;
      node.reductions = fix.trace;
      trace_.nodes.push_back(std::move(node));
    }

    if (fix.rejected) {
      const int mu = fix.trace.back().mu_before;
      ++stats_.rejected_leaves;
      if (index >= 0) {
        TraceNode& node = trace_.nodes[static_cast<std::size_t>(index)];
        node.kind = NodeKind::kRejected;
        node.mu = mu;
        node.rejecting_rule = fix.rejecting_rule;
      }
      notify(fix.instance, NodeKind::kRejected, mu, depth);
      return Outcome{std::nullopt, mu, true};
    }

    Census census(fix.instance);
    const int mu = census.measure().mu();
    stats_.max_mu = std::max(stats_.max_mu, mu);
    if (depth == 0) {
      stats_.mu0 = mu;
      depth_limit_ = mu + 1;
    } else if (depth > depth_limit_) {
      throw InternalError("search depth " + std::to_string(depth) +
                          " exceeds root measure + 1 = " + std::to_string(depth_limit_));
    }
    if (index >= 0) trace_.nodes[static_cast<std::size_t>(index)].mu = mu;

    std::optional<PivotChoice> pivot = select_pivot(fix.instance, census);
    if (!pivot) {
      ++stats_.leaves;
      notify(fix.instance, NodeKind::kBaseCase, mu, depth);
      BaseResult base = solve_base_detailed(fix.instance, options_.base_solver);
      if (base.fell_back) ++stats_.base_fallbacks;
      if (!base.solution) return Outcome{std::nullopt, mu, false};
      return Outcome{merged(std::move(*base.solution), fix.forced), mu, false};
    }

    ++stats_.internal_nodes;
    notify(fix.instance, NodeKind::kBranch, mu, depth);
    if (index >= 0) {
      TraceNode& node = trace_.nodes[static_cast<std::size_t>(index)];
      node.kind = NodeKind::kBranch;
      node.pivot = pivot;
    }

    const Vertex v = pivot->vertex;
    DisInstance deleted = branch_delete(fix.instance, v);
    DisInstance moved = branch_to_w(fix.instance, v);
    if (options_.validate_each_step) {
      check_valid(deleted, "delete branch");
      check_valid(moved, "W branch");
    }
    Outcome del = visit(std::move(deleted), EdgeLabel::kDelete, index, depth + 1);
    const int w_index = static_cast<int>(trace_.nodes.size());
    Outcome to_w = visit(std::move(moved), EdgeLabel::kToW, index, depth + 1);
    if (index >= 0) {
      TraceNode& node = trace_.nodes[static_cast<std::size_t>(index)];
      node.delete_child = index + 1;
      node.w_child = w_index;
    }

    auto drop = [mu](const Outcome& o) -> std::optional<int> {
      if (o.rejected) return std::nullopt;
      return mu - o.mu;
    };
    if (!vector_ok(drop(del), drop(to_w))) ++stats_.vector_violations;

    std::optional<VertexSet> best;
    if (del.solution) best = merged(std::move(*del.solution), {v});
    if (to_w.solution && (!best || better(*to_w.solution, *best))) best = std::move(to_w.solution);
    if (!best) return Outcome{std::nullopt, mu, false};
    return Outcome{merged(std::move(*best), fix.forced), mu, false};
  }

  EngineStats stats() const { return stats_; }
  BranchTrace take_trace() { return std::move(trace_); }

 private:
  void notify(const DisInstance& inst, NodeKind kind, int mu, int depth) {
    if (options_.node_observer) options_.node_observer(inst, NodeInfo{kind, mu, depth});
  }

  static void check_valid(const DisInstance& inst, const char* where) {
    ValidationReport report = validate(inst);
    if (!report.ok()) {
      throw InternalError(std::string(where) + " broke instance invariant " +
                          report.violations.front());
    }
  }

  const EngineOptions& options_;
  ReduceOptions reduce_;
  EngineStats stats_;
  BranchTrace trace_;
  int depth_limit_ = 0;
};

}  // namespace

DisjointResult solve_disjoint(const DisInstance& inst, const EngineOptions& options) {
  Engine engine(options);
  Engine::Outcome outcome = engine.visit(inst, EdgeLabel::kRoot, -1, 0);
  DisjointResult result;
  result.stats = engine.stats();
  result.trace = engine.take_trace();
  if (outcome.solution) {
    const VertexSet& x = *outcome.solution;
    bool ok = check_solution(inst.graph(), x, inst.budget());
    for (Vertex v : x) ok = ok && inst.deletable(v);
    if (!ok) throw InternalError("disjoint solver produced an invalid solution");
    result.solution = std::move(outcome.solution);
  }
  return result;
}

}  // namespace ifvs
