#include "ifvs/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ifvs {

VertexSet& normalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

namespace {

auto find_incidence(std::vector<Incidence>& list, Vertex w) {
  return std::lower_bound(
      list.begin(), list.end(), w,
      [](const Incidence& inc, Vertex x) { return inc.neighbor < x; });
}

auto find_incidence(const std::vector<Incidence>& list, Vertex w) {
  return std::lower_bound(
      list.begin(), list.end(), w,
      [](const Incidence& inc, Vertex x) { return inc.neighbor < x; });
}

void bump(std::vector<Incidence>& list, Vertex w, int by) {
  auto it = find_incidence(list, w);
  if (it != list.end() && it->neighbor == w) {
    it->multiplicity += by;
  } else {
    list.insert(it, Incidence{w, by});
  }
}

void erase(std::vector<Incidence>& list, Vertex w) {
  auto it = find_incidence(list, w);
  if (it != list.end() && it->neighbor == w) list.erase(it);
}

// Membership mask over g's id range.
std::vector<char> mask_of(const MultiGraph& g, const VertexSet& x) {
  std::vector<char> in(g.id_bound(), 0);
  for (Vertex v : x) {
    if (!g.contains(v)) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is not in the graph");
    }
    in[static_cast<std::size_t>(v)] = 1;
  }
  return in;
}

}  // namespace

MultiGraph::MultiGraph(std::size_t n) : adj_(n), alive_(n, true), num_alive_(n) {}

Vertex MultiGraph::add_vertex() {
  adj_.emplace_back();
  alive_.push_back(true);
  ++num_alive_;
  return static_cast<Vertex>(adj_.size() - 1);
}

void MultiGraph::check(Vertex v) const {
  if (!contains(v)) {
    throw std::invalid_argument("unknown vertex " + std::to_string(v));
  }
}

void MultiGraph::add_edge(Vertex u, Vertex v, int multiplicity) {
  check(u);
  check(v);
  if (multiplicity <= 0) throw std::invalid_argument("multiplicity must be positive");
  bump(adj_[static_cast<std::size_t>(u)], v, multiplicity);
  if (u != v) bump(adj_[static_cast<std::size_t>(v)], u, multiplicity);
}

int MultiGraph::remove_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  int m = multiplicity(u, v);
  if (m == 0) return 0;
  erase(adj_[static_cast<std::size_t>(u)], v);
  if (u != v) erase(adj_[static_cast<std::size_t>(v)], u);
  return m;
}

void MultiGraph::remove_vertex(Vertex v) {
  check(v);
  auto& list = adj_[static_cast<std::size_t>(v)];
  for (const Incidence& inc : list) {
    if (inc.neighbor != v) erase(adj_[static_cast<std::size_t>(inc.neighbor)], v);
  }
  list.clear();
  list.shrink_to_fit();
  alive_[static_cast<std::size_t>(v)] = false;
  --num_alive_;
}

std::size_t MultiGraph::num_edges() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    for (const Incidence& inc : adj_[v]) {
      if (static_cast<std::size_t>(inc.neighbor) >= v) total += static_cast<std::size_t>(inc.multiplicity);
    }
  }
  return total;
}

VertexSet MultiGraph::vertices() const {
  VertexSet out;
  out.reserve(num_alive_);
  for (std::size_t v = 0; v < alive_.size(); ++v) {
    if (alive_[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::span<const Incidence> MultiGraph::incident(Vertex v) const {
  check(v);
  return adj_[static_cast<std::size_t>(v)];
}

int MultiGraph::multiplicity(Vertex u, Vertex v) const {
  check(u);
  check(v);
  const auto& list = adj_[static_cast<std::size_t>(u)];
  auto it = find_incidence(list, v);
  return (it != list.end() && it->neighbor == v) ? it->multiplicity : 0;
}

int MultiGraph::degree(Vertex v) const {
  int d = 0;
  for (const Incidence& inc : incident(v)) {
    d += inc.neighbor == v ? 2 * inc.multiplicity : inc.multiplicity;
  }
  return d;
}

std::vector<Edge> MultiGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (const Incidence& inc : adj_[u]) {
      if (static_cast<std::size_t>(inc.neighbor) >= u) {
        out.push_back(Edge{static_cast<Vertex>(u), inc.neighbor, inc.multiplicity});
      }
    }
  }
  return out;
}

bool operator==(const MultiGraph& a, const MultiGraph& b) {
  return a.vertices() == b.vertices() && a.edges() == b.edges();
}

int degree_into(const MultiGraph& g, Vertex v, const VertexSet& x) {
  if (!g.contains(v)) {
    throw std::invalid_argument("unknown vertex " + std::to_string(v));
  }
  int d = 0;
  for (const Incidence& inc : g.incident(v)) {
    if (!contains(x, inc.neighbor)) continue;
    d += inc.neighbor == v ? 2 * inc.multiplicity : inc.multiplicity;
  }
  return d;
}

std::vector<VertexSet> components(const MultiGraph& g, const VertexSet& x) {
  std::vector<char> in = mask_of(g, x);
  std::vector<char> seen(g.id_bound(), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s : x) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp;
    stack.push_back(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (const Incidence& inc : g.incident(u)) {
        auto w = static_cast<std::size_t>(inc.neighbor);
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(inc.neighbor);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return out;
}

bool is_forest(const MultiGraph& g, const VertexSet& x) {
  std::vector<char> in = mask_of(g, x);
  UnionFind uf(g.id_bound());
  for (Vertex u : x) {
    for (const Incidence& inc : g.incident(u)) {
      Vertex w = inc.neighbor;
      if (w < u || !in[static_cast<std::size_t>(w)]) continue;
      if (w == u || inc.multiplicity >= 2) return false;
      if (!uf.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(w))) return false;
    }
  }
  return true;
}

bool is_forest(const MultiGraph& g) { return is_forest(g, g.vertices()); }

MultiGraph without(const MultiGraph& g, const VertexSet& removed) {
  MultiGraph h = g;
  for (Vertex v : removed) {
    if (h.contains(v)) h.remove_vertex(v);
  }
  return h;
}

Contraction contract_components(const MultiGraph& g,
                                const std::vector<VertexSet>& parts) {
  std::vector<Vertex> node_of(g.id_bound(), kNoVertex);
  Vertex next = 0;
  for (const VertexSet& part : parts) {
    if (part.empty()) throw std::invalid_argument("empty contraction part");
    for (Vertex v : part) {
      if (!g.contains(v)) {
        throw std::invalid_argument("contraction part names unknown vertex " +
                                    std::to_string(v));
      }
      if (node_of[static_cast<std::size_t>(v)] != kNoVertex) {
        throw std::invalid_argument("contraction parts overlap at vertex " +
                                    std::to_string(v));
      }
      node_of[static_cast<std::size_t>(v)] = next;
    }
    VertexSet sorted = part;
    if (components(g, normalize(sorted)).size() != 1) {
      throw std::invalid_argument("contraction part is not connected");
    }
    ++next;
  }
  for (Vertex v : g.vertices()) {
    if (node_of[static_cast<std::size_t>(v)] == kNoVertex) node_of[static_cast<std::size_t>(v)] = next++;
  }
  const auto num_parts = static_cast<Vertex>(parts.size());
  MultiGraph h(static_cast<std::size_t>(next));
  for (const Edge& e : g.edges()) {
    Vertex a = node_of[static_cast<std::size_t>(e.u)];
    Vertex b = node_of[static_cast<std::size_t>(e.v)];
    if (a == b && a < num_parts) continue;  // internal to a part
    h.add_edge(a, b, e.multiplicity);
  }
  return Contraction{std::move(h), std::move(node_of)};
}

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

}  // namespace ifvs
