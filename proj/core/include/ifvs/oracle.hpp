#pragma once

#include <cstddef>
#include <optional>

#include "ifvs/graph.hpp"
#include "ifvs/instance.hpp"

namespace ifvs {

/// Exhaustive search is refused above this many candidate vertices.
inline constexpr std::size_t kOracleLimit = 22;

/// Minimum independent FVS of size <= k by enumerating candidate sets in
/// increasing size (lexicographically first among the minimum ones), or
/// nullopt. Throws std::invalid_argument when g has more than kOracleLimit
/// vertices.
std::optional<VertexSet> oracle_ifvs(const MultiGraph& g, int k);

/// Same over subsets of F \ R of a disjoint instance, using its budget.
/// Throws std::invalid_argument when |F \ R| exceeds kOracleLimit.
std::optional<VertexSet> oracle_disjoint(const DisInstance& inst);

/// Minimum feedback vertex set size, independence not required.
int oracle_min_fvs(const MultiGraph& g);

}  // namespace ifvs
