#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ifvs/instance.hpp"

namespace ifvs {

inline constexpr int kNumRules = 7;

enum class ReductionResult { kReduced, kRejectNo, kUnchanged };

struct ReductionOutcome {
  ReductionResult result = ReductionResult::kUnchanged;
  int rule = 0;
  Vertex pivot = kNoVertex;
  /// Vertices the rule put into the solution (rule 5 only).
  VertexSet forced;
  VertexSet touched;
  /// The rewritten instance when result == kReduced.
  std::optional<DisInstance> instance;
};

/// One rule firing as recorded by reduce_to_fixpoint. For rejecting rules
/// mu_after equals mu_before.
struct FiringRecord {
  int rule = 0;
  Vertex pivot = kNoVertex;
  int mu_before = 0;
  int mu_after = 0;
};
using ReductionTrace = std::vector<FiringRecord>;

/// Applies rule `rule` (1..7) at its lowest-id site. Rules assume that every
/// lower-numbered rule is inapplicable; reduce_to_fixpoint guarantees that.
///
///  1. delete a vertex of degree <= 1
///  2. bypass one of two adjacent degree-2 F-vertices
///  3. reject when k < 0 or mu < 0
///  4. reject when an R-vertex has two edges into one W-component
///  5. delete (into the solution) an F\R-vertex with two edges into one
///     W-component, reserving its F-neighbours and decrementing k
///  6. move an R-vertex with Gdeg >= 1 or Tdeg >= 1 into W
///  7. reserve the F\R-neighbours of an F\R-vertex when they all have
///     degree 2
ReductionOutcome apply_rule(const DisInstance& inst, int rule);

using FiringObserver =
    std::function<void(const DisInstance& before, const ReductionOutcome& outcome)>;

struct ReduceOptions {
  /// Run validate() after every firing; a violation throws InternalError.
  bool validate_each_step = false;
  /// Called once per firing with the pre-firing instance; the outcome carries
  /// the post-firing instance.
  FiringObserver observer;
};

struct FixpointResult {
  bool rejected = false;
  int rejecting_rule = 0;
  /// The reduced instance; on rejection, the instance the rejecting rule saw.
  DisInstance instance;
  VertexSet forced;
  ReductionTrace trace;
};

/// Applies the lowest-numbered applicable rule until none applies or the
/// instance is rejected.
FixpointResult reduce_to_fixpoint(DisInstance inst, const ReduceOptions& options = {});

}  // namespace ifvs
