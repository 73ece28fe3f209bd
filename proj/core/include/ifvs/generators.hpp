#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "ifvs/graph.hpp"
#include "ifvs/instance.hpp"

namespace ifvs {

/// Seeded source of randomness whose output does not depend on the standard
/// library implementation (std distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  /// True with probability num / den.
  bool chance(int num, int den);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// n vertices and m edge occurrences between uniform endpoint pairs; each
/// occurrence is a loop with probability loop_permille / 1000. Repeated pairs
/// become parallel edges.
MultiGraph random_multigraph(int n, int m, std::uint64_t seed, int loop_permille = 30);

struct PlantedInstance {
  MultiGraph graph;
  /// An independent FVS of size k built into the graph; only an upper bound.
  VertexSet witness;
};

/// A random spanning tree on n - k vertices plus an independent set S of k
/// vertices, each joined to `attach` (2..4, 0 = random per vertex) distinct
/// tree vertices. Every cycle passes through S.
PlantedInstance planted(int n, int k, std::uint64_t seed, int attach = 0);

/// subdivide_once of random_multigraph(n, m, seed).
MultiGraph subdivided(int n, int m, std::uint64_t seed);

/// Disjoint instance whose F-vertices are all nice vertices or tents over
/// W-components that are random trees; budget k (-1 = random in 0..pairs).
DisInstance base_case(int pairs, std::uint64_t seed, int k = -1);

struct DisParams {
  int w_vertices = 4;
  int f_vertices = 8;
  /// W-F edge occurrences; repeated pairs become parallel edges.
  int cross_edges = 10;
  /// Chance per mille that an F-vertex starts in R.
  int reserve_permille = 200;
  /// Chance per mille that a vertex attaches to an earlier one of its side.
  int tree_permille = 650;
  /// -1 picks k uniformly in 0..|F \ R|.
  int k = -1;
};

/// Valid disjoint instance (G[W] and G[F] forests) with shuffled ids.
DisInstance random_dis_instance(const DisParams& params, std::uint64_t seed);

/// Scenario fixtures for measure-drop tests, found by seeded search
/// over small random instances:
///  - kNiceToW: the instance just before rule 6 fires at an R-vertex with no
///    W-neighbour and a P-nice neighbour; `subject` is that R-vertex.
///  - kTentNeighbor: a reduced instance with a vertex v in F \ R that is
///    neither nice, a tent nor P-nice and has a P-tent neighbour; `subject`
///    is v.
enum class GadgetKind : std::uint8_t { kNiceToW, kTentNeighbor };

struct Gadget {
  DisInstance instance;
  Vertex subject = kNoVertex;
};

/// Throws std::runtime_error when no fixture is found within the search cap.
Gadget gadget(GadgetKind kind, std::uint64_t seed);

GadgetKind parse_gadget_kind(const std::string& name);

}  // namespace ifvs
