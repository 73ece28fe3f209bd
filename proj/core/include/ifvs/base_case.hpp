#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ifvs/instance.hpp"

namespace ifvs {

/// Graphic matroid parity encoding of an instance whose F-vertices are all
/// nice vertices or tents.
///
/// Ground nodes 0..rho-1 are the contracted components of G[W]; each nice
/// vertex v additionally owns a fresh node x_v. A nice vertex between
/// components a, b becomes the pair {a-x_v, x_v-b}; a tent on a, b, c becomes
/// {a-b, b-c}. Keeping a set of nice vertices and tents leaves G a forest
/// exactly when the union of their pairs is acyclic.
struct ParityPair {
  enum class Kind : std::uint8_t { kNice, kTent };

  std::array<std::array<int, 2>, 2> edges{};
  Vertex origin = kNoVertex;
  Kind kind = Kind::kTent;
};

struct ParityInstance {
  int num_nodes = 0;
  std::vector<ParityPair> pairs;
};

struct ParityResult {
  /// Indices of kept pairs, ascending.
  std::vector<int> kept;
  int nu = 0;
  /// Rank of the random skew-symmetric matrix (2 * nu) for the algebraic
  /// solver; 0 for the reference solver.
  int rank = 0;
  /// True when the algebraic path had to defer to the reference solver.
  bool fell_back = false;
};

/// Throws InternalError unless every F-vertex is nice or a tent with edges
/// into pairwise distinct W-components.
ParityInstance build_parity(const DisInstance& inst);

/// True iff the union of the chosen pairs' edges is a forest.
bool pairs_acyclic(const ParityInstance& p, std::span<const int> chosen);

/// Exact solver: branch over keep/discard of tent-like pairs, then take a
/// greedy spanning forest of the remaining serial (nice) pairs.
ParityResult matroid_parity_reference(const ParityInstance& p);

struct AlgebraicOptions {
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  /// Independent rank samples per evaluation of the parity number.
  int resamples = 3;
  /// Full attempts (rank + recovery + verification) before giving up.
  int attempts = 3;
};

/// Randomized linear matroid parity over GF(2^61 - 1): nu = rank(sum x_i
/// (a_i b_i^T - b_i a_i^T)) / 2, with the kept set recovered by pair-deletion
/// rank probes. Returns nullopt when no attempt produced a verified kept set.
std::optional<ParityResult> matroid_parity_algebraic(const ParityInstance& p,
                                                     const AlgebraicOptions& options = {});

/// Algebraic solver with fallback to the reference solver; for at most
/// kCrossCheckPairs pairs the result is also compared with the reference.
ParityResult matroid_parity_max(const ParityInstance& p,
                                const AlgebraicOptions& options = {});

inline constexpr std::size_t kCrossCheckPairs = 20;

enum class BaseSolver : std::uint8_t { kDefault, kAlgebraic, kReference };

/// Minimum solution of a base-case instance, or nullopt if it exceeds k.
std::optional<VertexSet> solve_base(const DisInstance& inst,
                                    BaseSolver solver = BaseSolver::kDefault);

struct BaseResult {
  std::optional<VertexSet> solution;
  bool fell_back = false;
};

BaseResult solve_base_detailed(const DisInstance& inst,
                               BaseSolver solver = BaseSolver::kDefault);

}  // namespace ifvs
