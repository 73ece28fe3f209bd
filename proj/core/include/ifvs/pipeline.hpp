#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ifvs/branching.hpp"
#include "ifvs/graph.hpp"

namespace ifvs {

struct SolveOptions {
  /// Scan every guess and return a minimum solution; otherwise stop at the
  /// first guess (in enumeration order) that has a solution.
  bool minimize = false;
  /// Worker threads for guess evaluation. Results do not depend on it.
  int threads = 1;
  /// Feedback vertex set to use instead of calling the FVS provider.
  std::optional<VertexSet> external_fvs;
  /// Keep the branch trace of every disjoint subproblem.
  bool record_trace = false;
  EngineOptions engine;
};

struct SolveStats {
  int fvs_size = 0;
  long guesses_tried = 0;
  long branch_nodes = 0;
  int max_mu = 0;
  /// Largest root measure over all disjoint subproblems.
  int mu0 = -1;
  long leaves = 0;
  /// Sum over subproblems of Fib(mu0 + 2).
  std::uint64_t fib_bound = 0;
  long vector_violations = 0;
  /// Subproblems whose base-case leaves exceeded Fib(mu0 + 2).
  long leaf_bound_violations = 0;
};

/// One disjoint subproblem: the guessed part Z' of the solution inside Z.
struct GuessTrace {
  VertexSet guess;
  VertexSet w;
  VertexSet r;
  int budget = 0;
  EngineStats stats;
  BranchTrace trace;
};

struct IfvsResult {
  std::optional<VertexSet> solution;
  SolveStats stats;
  std::vector<GuessTrace> guesses;  // only with record_trace
};

/// Independent feedback vertex set of size <= k, minimum when
/// options.minimize. Every returned set is re-verified with check_solution.
/// Throws std::invalid_argument for k < 0 or an external set that is not a
/// feedback vertex set.
IfvsResult solve_ifvs(const MultiGraph& g, int k, const SolveOptions& options = {});

/// Replaces every edge occurrence u-v by a path u-s-v through a fresh vertex
/// s; a loop at v becomes a triangle on v and two fresh vertices. The result
/// is simple and loop-free and keeps the original ids.
MultiGraph subdivide_once(const MultiGraph& g);

}  // namespace ifvs
