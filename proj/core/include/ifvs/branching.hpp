#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ifvs/base_case.hpp"
#include "ifvs/instance.hpp"
#include "ifvs/reductions.hpp"

namespace ifvs {

/// A: Gdeg >= 3.  B: Gdeg >= 1 and Tdeg >= 1.  C: Tdeg >= 2.
enum class PivotCase : std::uint8_t { kA, kB, kC };

const char* to_string(PivotCase c);

struct PivotChoice {
  Vertex vertex = kNoVertex;
  PivotCase pivot_case = PivotCase::kA;

  friend bool operator==(const PivotChoice&, const PivotChoice&) = default;
};

/// Earliest case wins; lowest id within a case. Candidates are F-vertices
/// that are not nice, not tents and not P-nice. The instance must be reduced.
std::optional<PivotChoice> select_pivot(const DisInstance& inst);
std::optional<PivotChoice> select_pivot(const DisInstance& inst, const Census& census);

/// Puts v into the solution: deletes it, reserves N(v) & F, decrements k.
DisInstance branch_delete(const DisInstance& inst, Vertex v);
/// Moves v into W. Throws InternalError if that would close a cycle in W.
DisInstance branch_to_w(const DisInstance& inst, Vertex v);

enum class NodeKind : std::uint8_t { kBranch, kBaseCase, kRejected };
enum class EdgeLabel : std::uint8_t { kRoot, kDelete, kToW };

const char* to_string(NodeKind k);
const char* to_string(EdgeLabel l);

/// One search-tree node. `mu` is taken at the node's reduction fixpoint (at
/// the moment of rejection for rejected nodes).
struct TraceNode {
  NodeKind kind = NodeKind::kBaseCase;
  EdgeLabel label = EdgeLabel::kRoot;
  int parent = -1;
  int depth = 0;
  int mu = 0;
  int rejecting_rule = 0;
  std::optional<PivotChoice> pivot;
  int delete_child = -1;
  int w_child = -1;
  ReductionTrace reductions;
};

struct BranchTrace {
  std::vector<TraceNode> nodes;  // nodes[0] is the root

  /// Measure drop from an internal node to a child; nullopt for a rejected
  /// child, which contributes no leaves.
  std::optional<int> drop(const TraceNode& parent, int child) const;
  /// Whether an internal node realises the (1,2) branching vector.
  bool branching_vector_ok(const TraceNode& node) const;
};

struct EngineStats {
  long nodes = 0;
  long internal_nodes = 0;
  /// Leaves that reached the polynomial base case.
  long leaves = 0;
  long rejected_leaves = 0;
  /// Measure at the root's reduction fixpoint; -1 if the root was rejected.
  int mu0 = -1;
  int max_mu = 0;
  int max_depth = 0;
  /// Internal nodes whose children miss the (1,2) vector.
  long vector_violations = 0;
  long base_fallbacks = 0;

  EngineStats& operator+=(const EngineStats& o);
};

struct NodeInfo {
  NodeKind kind;
  int mu;
  int depth;
};

struct EngineOptions {
  bool record_trace = false;
  /// validate() after every reduction firing and every branch.
  bool validate_each_step = false;
  BaseSolver base_solver = BaseSolver::kDefault;
  /// Called at every node with the instance at its reduction fixpoint.
  std::function<void(const DisInstance&, const NodeInfo&)> node_observer;
  /// Forwarded to every reduce_to_fixpoint call.
  FiringObserver firing_observer;
};

struct DisjointResult {
  std::optional<VertexSet> solution;
  EngineStats stats;
  BranchTrace trace;  // empty unless record_trace
};

/// Minimum independent X within F \ R with |X| <= k and G - X a forest, or
/// nullopt. The returned set is verified against the input instance.
DisjointResult solve_disjoint(const DisInstance& inst, const EngineOptions& options = {});

}  // namespace ifvs
