#include "ifvs/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace ifvs {
namespace {

using Mask = std::uint32_t;

// Dense re-indexing of the graph for subset enumeration over `candidates`.
class Enumerator {
 public:
  Enumerator(const MultiGraph& g, const VertexSet& candidates) : candidates_(candidates) {
    const VertexSet vs = g.vertices();
    index_.assign(g.id_bound(), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) index_[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
    num_nodes_ = vs.size();
    for (const Edge& e : g.edges()) edges_.push_back({at(e.u), at(e.v), e.multiplicity});
    bit_of_.assign(num_nodes_, 0);
    for (std::size_t b = 0; b < candidates.size(); ++b) {
      bit_of_[static_cast<std::size_t>(at(candidates[b]))] = Mask{1} << b;
    }
  }

  // Lexicographically first minimum subset satisfying the constraints.
  std::optional<VertexSet> minimum(int k, bool independent) const {
    const int limit = std::min<int>(k, static_cast<int>(candidates_.size()));
    for (int size = 0; size <= limit; ++size) {
      std::optional<Mask> hit = first_of_size(static_cast<std::size_t>(size), independent);
      if (hit) {
        VertexSet out;
        for (std::size_t b = 0; b < candidates_.size(); ++b) {
          if (*hit >> b & 1U) out.push_back(candidates_[b]);
        }
        return out;
      }
    }
    return std::nullopt;
  }

 private:
  struct DenseEdge {
    int u;
    int v;
    int multiplicity;
  };

  int at(Vertex v) const { return index_[static_cast<std::size_t>(v)]; }

  bool accepts(Mask s, bool independent) const {
    UnionFind uf(num_nodes_);
    for (const DenseEdge& e : edges_) {
      const Mask mu = bit_of_[static_cast<std::size_t>(e.u)];
      const Mask mv = bit_of_[static_cast<std::size_t>(e.v)];
      const bool hit_u = (s & mu) != 0;
      const bool hit_v = (s & mv) != 0;
      if (hit_u && hit_v && e.u != e.v && independent) return false;
      if (hit_u || hit_v) continue;
      if (e.u == e.v || e.multiplicity > 1) return false;
      if (!uf.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) return false;
    }
    return true;
  }

  // Candidate bit b corresponds to the b-th smallest candidate id, so
  // walking index combinations in lexicographic order walks vertex sets in
  // lexicographic order.
  std::optional<Mask> first_of_size(std::size_t size, bool independent) const {
    const std::size_t n = candidates_.size();
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      Mask s = 0;
      for (std::size_t i : idx) s |= Mask{1} << i;
      if (accepts(s, independent)) return s;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + (i - 1)) --i;
      if (i == 0) return std::nullopt;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  VertexSet candidates_;
  std::vector<int> index_;
  std::size_t num_nodes_ = 0;
  std::vector<DenseEdge> edges_;
  std::vector<Mask> bit_of_;
};

}  // namespace

std::optional<VertexSet> oracle_ifvs(const MultiGraph& g, int k) {
  if (g.num_vertices() > kOracleLimit) {
    throw std::invalid_argument("oracle refuses graphs with more than " +
                                std::to_string(kOracleLimit) + " vertices");
  }
  if (k < 0) return std::nullopt;
  return Enumerator(g, g.vertices()).minimum(k, true);
}

std::optional<VertexSet> oracle_disjoint(const DisInstance& inst) {
  const VertexSet candidates = inst.deletable_set();
  if (candidates.size() > kOracleLimit) {
    throw std::invalid_argument("oracle refuses more than " + std::to_string(kOracleLimit) +
                                " deletable vertices");
  }
  if (inst.budget() < 0) return std::nullopt;
  return Enumerator(inst.graph(), candidates).minimum(inst.budget(), true);
}

int oracle_min_fvs(const MultiGraph& g) {
  if (g.num_vertices() > kOracleLimit) {
    throw std::invalid_argument("oracle refuses graphs with more than " +
                                std::to_string(kOracleLimit) + " vertices");
  }
  const int n = static_cast<int>(g.num_vertices());
  return static_cast<int>(Enumerator(g, g.vertices()).minimum(n, false)->size());
}

}  // namespace ifvs
