#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ifvs {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Sorts and deduplicates in place; returns the argument for chaining.
VertexSet& normalize(VertexSet& s);
bool contains(const VertexSet& s, Vertex v);

struct Incidence {
  Vertex neighbor;
  int multiplicity;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

struct Edge {
  Vertex u;  // u <= v
  Vertex v;
  int multiplicity;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph with loops and stable vertex ids.
///
/// Ids are handed out densely by add_vertex() and are never reused after
/// remove_vertex(), so ids seen in a trace always name the same vertex.
/// Incidence lists are kept sorted by neighbor id; a loop at v is stored as a
/// single entry {v, m} in v's list and contributes 2m to deg(v).
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t n);

  Vertex add_vertex();
  /// Adds `multiplicity` parallel copies of u-v (a loop when u == v).
  void add_edge(Vertex u, Vertex v, int multiplicity = 1);
  /// Removes every copy of u-v; returns the multiplicity that was removed.
  int remove_edge(Vertex u, Vertex v);
  void remove_vertex(Vertex v);

  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < alive_.size() &&
           alive_[static_cast<std::size_t>(v)];
  }
  /// One past the largest id ever issued.
  std::size_t id_bound() const { return alive_.size(); }
  std::size_t num_vertices() const { return num_alive_; }
  /// Edge occurrences, counted with multiplicity.
  std::size_t num_edges() const;

  VertexSet vertices() const;
  std::span<const Incidence> incident(Vertex v) const;
  int multiplicity(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  bool has_loop(Vertex v) const { return multiplicity(v, v) > 0; }
  /// Each unordered pair once, sorted by (u, v).
  std::vector<Edge> edges() const;

  /// Same vertex ids, same edges, ignoring dead ids.
  friend bool operator==(const MultiGraph& a, const MultiGraph& b);

 private:
  void check(Vertex v) const;

  std::vector<std::vector<Incidence>> adj_;
  std::vector<bool> alive_;
  std::size_t num_alive_ = 0;
};

/// Total multiplicity of edges from v into X; a loop at v counts 2 when v is
/// in X. Throws std::invalid_argument if v is not a vertex of g.
int degree_into(const MultiGraph& g, Vertex v, const VertexSet& x);

/// Connected components of g[X], each sorted, ordered by smallest member.
std::vector<VertexSet> components(const MultiGraph& g, const VertexSet& x);

/// True iff g[X] has no cycle. Loops and parallel edges inside X are cycles.
bool is_forest(const MultiGraph& g, const VertexSet& x);
bool is_forest(const MultiGraph& g);

/// Graph obtained by deleting `removed` from g (ids preserved).
MultiGraph without(const MultiGraph& g, const VertexSet& removed);

struct Contraction {
  MultiGraph graph;
  /// node_of[v] is the contracted node holding original vertex v, or
  /// kNoVertex for ids that are not vertices of the source graph.
  std::vector<Vertex> node_of;
};

/// Contracts each part to a single node. Part i becomes node i; every vertex
/// outside all parts keeps a node of its own, numbered after the parts in
/// increasing id order. Edges with both ends in one part are dropped (no
/// loops are created); all other edges keep their multiplicity and parallel
/// edges between nodes accumulate. Throws std::invalid_argument when parts
/// overlap, name unknown vertices, or induce a disconnected subgraph.
Contraction contract_components(const MultiGraph& g,
                                const std::vector<VertexSet>& parts);

/// Disjoint-set forest over dense indices.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x);
  /// Returns false when a and b were already joined.
  bool unite(std::size_t a, std::size_t b);

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace ifvs
