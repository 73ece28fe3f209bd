#pragma once

#include <optional>
#include <vector>

#include "ifvs/graph.hpp"

namespace ifvs {

/// Some feedback vertex set of size <= k, or nullopt when none exists.
///
/// Branch and bound: degree <= 1 deletion, degree-2 bypass, loop forcing,
/// branching over the deletable vertices of a shortest cycle (earlier ones
/// become undeletable in later branches), pruned by a greedy packing of
/// vertex-disjoint cycles.
std::optional<VertexSet> fvs_at_most(const MultiGraph& g, int k);

/// A minimum feedback vertex set, by iterative deepening over fvs_at_most.
VertexSet min_fvs(const MultiGraph& g);

/// Shortest cycle of g as a vertex sequence; empty when g is a forest.
std::vector<Vertex> shortest_cycle(const MultiGraph& g);

/// Size of a greedy packing of vertex-disjoint shortest cycles, a lower
/// bound on every feedback vertex set.
int cycle_packing_bound(const MultiGraph& g);

}  // namespace ifvs
