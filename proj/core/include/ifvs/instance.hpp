#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ifvs/graph.hpp"

namespace ifvs {

/// Which side of the (W, F) partition a vertex is on. R is the undeletable
/// part of F.
enum class Side : std::uint8_t { kAbsent, kW, kFree, kReserved };

/// A disjoint independent FVS instance (G, W, R, k): find an independent
/// X within F \ R, |X| <= k, such that G - X is a forest, where F = V \ W.
///
/// The constructor only checks membership (W, R are vertex subsets and do not
/// meet). Forest conditions on G[F] and G[W] are reported by validate().
class DisInstance {
 public:
  DisInstance() = default;
  DisInstance(MultiGraph g, const VertexSet& w, const VertexSet& r, int k);

  const MultiGraph& graph() const { return g_; }
  int budget() const { return k_; }

  Side side(Vertex v) const {
    return g_.contains(v) ? side_[static_cast<std::size_t>(v)] : Side::kAbsent;
  }
  bool in_w(Vertex v) const { return side(v) == Side::kW; }
  bool in_f(Vertex v) const {
    Side s = side(v);
    return s == Side::kFree || s == Side::kReserved;
  }
  bool in_r(Vertex v) const { return side(v) == Side::kReserved; }
  /// In F \ R: the only vertices a solution may use.
  bool deletable(Vertex v) const { return side(v) == Side::kFree; }

  VertexSet w_set() const;
  VertexSet f_set() const;
  VertexSet r_set() const;
  VertexSet deletable_set() const;

  // Low-level edits used by the reduction rules and the branching engine.
  void delete_vertex(Vertex v);
  void add_edge(Vertex u, Vertex v, int multiplicity = 1);
  void move_to_w(Vertex v);
  void reserve(Vertex v);
  void set_budget(int k) { k_ = k; }

 private:
  MultiGraph g_;
  std::vector<Side> side_;
  int k_ = 0;
};

enum class VertexKind : std::uint8_t { kPlain, kNice, kTent, kPNice, kPTent };

const char* to_string(VertexKind kind);

/// Classification of an F-vertex together with the degree notions it is
/// derived from. gdeg == ndeg + deg_w always.
struct VertexClass {
  VertexKind kind = VertexKind::kPlain;
  int deg = 0;
  int deg_w = 0;
  int deg_f = 0;  // edges into F, with multiplicity
  int ndeg = 0;   // P-nice neighbors
  int gdeg = 0;
  int tdeg = 0;   // P-tent neighbors

  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

struct Measure {
  int k = 0;
  int rho = 0;  // components of G[W]
  int eta = 0;  // nice vertices
  int tau = 0;  // tents

  int mu() const { return k + rho - (eta + tau); }
  friend bool operator==(const Measure&, const Measure&) = default;
};

/// Snapshot of every classification-relevant quantity of an instance.
/// Invalidated by any edit to the instance it was taken from.
class Census {
 public:
  explicit Census(const DisInstance& inst);

  /// Dense label of v's component in G[W]; -1 when v is not in W.
  int w_component(Vertex v) const { return w_comp_[static_cast<std::size_t>(v)]; }
  int rho() const { return rho_; }
  /// Only meaningful for F-vertices.
  const VertexClass& of(Vertex v) const { return cls_[static_cast<std::size_t>(v)]; }
  Measure measure() const { return Measure{k_, rho_, eta_, tau_}; }

 private:
  std::vector<int> w_comp_;
  std::vector<VertexClass> cls_;
  int k_ = 0;
  int rho_ = 0;
  int eta_ = 0;
  int tau_ = 0;
};

/// Throws std::invalid_argument when v is not an F-vertex of inst.
VertexClass classify(const DisInstance& inst, Vertex v);

Measure measure(const DisInstance& inst);

struct ValidationReport {
  /// Names of violated invariants: "F-not-forest", "W-not-forest",
  /// "loop-in-F". W/R membership is already enforced by the constructor.
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& name) const;
};

ValidationReport validate(const DisInstance& inst);

/// True iff |S| <= k, S is independent in g and g - S is a forest. A loop at
/// a member of S does not break independence.
bool check_solution(const MultiGraph& g, const VertexSet& s, int k);

}  // namespace ifvs
