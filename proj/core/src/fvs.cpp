#include "ifvs/fvs.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace ifvs {

std::vector<Vertex> shortest_cycle(const MultiGraph& g) {
  const VertexSet vs = g.vertices();
  for (Vertex v : vs) {
    if (g.has_loop(v)) return {v};
  }
  for (const Edge& e : g.edges()) {
    if (e.multiplicity >= 2) return {e.u, e.v};
  }

  const std::size_t n = g.id_bound();
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> best;
  int best_len = std::numeric_limits<int>::max();
  std::deque<Vertex> queue;
  for (Vertex s : vs) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = kNoVertex;
    queue.assign(1, s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      // No shorter cycle can be closed from deeper vertices.
      if (2 * dist[static_cast<std::size_t>(u)] + 1 >= best_len) break;
      for (const Incidence& inc : g.incident(u)) {
        auto w = static_cast<std::size_t>(inc.neighbor);
        if (dist[w] < 0) {
          dist[w] = dist[static_cast<std::size_t>(u)] + 1;
          parent[w] = u;
          queue.push_back(inc.neighbor);
        } else if (inc.neighbor != parent[static_cast<std::size_t>(u)]) {
          int len = dist[static_cast<std::size_t>(u)] + dist[w] + 1;
          if (len >= best_len) continue;
          std::vector<Vertex> pu;
          std::vector<Vertex> pw;
          for (Vertex x = u; x != kNoVertex; x = parent[static_cast<std::size_t>(x)]) pu.push_back(x);
          for (Vertex x = inc.neighbor; x != kNoVertex; x = parent[static_cast<std::size_t>(x)]) pw.push_back(x);
          // Drop the shared prefix from s so the closed walk becomes a cycle.
          while (pu.size() > 1 && pw.size() > 1 && pu[pu.size() - 2] == pw[pw.size() - 2]) {
            pu.pop_back();
            pw.pop_back();
          }
          pw.pop_back();
          std::vector<Vertex> cycle(pu.begin(), pu.end());
          cycle.insert(cycle.end(), pw.rbegin(), pw.rend());
          if (static_cast<int>(cycle.size()) < best_len) {
            best_len = static_cast<int>(cycle.size());
            best = std::move(cycle);
          }
        }
      }
    }
    if (best_len == 3) break;
  }
  return best;
}

int cycle_packing_bound(const MultiGraph& g) {
  MultiGraph h = g;
  int count = 0;
  for (;;) {
    std::vector<Vertex> cycle = shortest_cycle(h);
    if (cycle.empty()) return count;
    ++count;
    for (Vertex v : cycle) h.remove_vertex(v);
  }
}

namespace {

struct State {
  MultiGraph g;
  std::vector<char> forbidden;
  int budget = 0;
  VertexSet chosen;

  void take(Vertex v) {
    chosen.push_back(v);
    --budget;
    g.remove_vertex(v);
  }
  bool is_forbidden(Vertex v) const { return forbidden[static_cast<std::size_t>(v)] != 0; }
};

// Returns false when the state cannot lead to a solution.
bool simplify(State& s) {
  bool changed = true;
  while (changed) {
    changed = false;
    if (s.budget < 0) return false;
    for (Vertex v : s.g.vertices()) {
      if (!s.g.contains(v)) continue;
      if (s.g.has_loop(v)) {
        if (s.is_forbidden(v)) return false;
        s.take(v);
        changed = true;
        continue;
      }
      const int d = s.g.degree(v);
      if (d <= 1) {
        s.g.remove_vertex(v);
        changed = true;
        continue;
      }
      if (d != 2) continue;
      auto inc = s.g.incident(v);
      if (inc.size() == 1) {
        // v hangs on a double edge to a: the 2-cycle must lose a or v.
        Vertex a = inc[0].neighbor;
        if (!s.is_forbidden(a)) {
          s.take(a);
        } else if (!s.is_forbidden(v)) {
          s.take(v);
        } else {
          return false;
        }
        changed = true;
        continue;
      }
      Vertex a = inc[0].neighbor;
      Vertex b = inc[1].neighbor;
      // A deletable neighbour dominates v; only a deletable v between two
      // forbidden neighbours has to stay.
      if (s.is_forbidden(v) || !s.is_forbidden(a) || !s.is_forbidden(b)) {
        s.g.remove_vertex(v);
        s.g.add_edge(a, b);
        changed = true;
      }
    }
  }
  if (s.budget < 0) return false;
  VertexSet locked;
  for (Vertex v : s.g.vertices()) {
    if (s.is_forbidden(v)) locked.push_back(v);
  }
  return is_forest(s.g, locked);
}

bool search(State s, VertexSet& out) {
  if (!simplify(s)) return false;
  if (is_forest(s.g)) {
    out = std::move(s.chosen);
    return true;
  }
  if (s.budget == 0 || cycle_packing_bound(s.g) > s.budget) return false;

  std::vector<Vertex> cycle = shortest_cycle(s.g);
  std::vector<Vertex> options;
  for (Vertex v : cycle) {
    if (!s.is_forbidden(v)) options.push_back(v);
  }
  for (std::size_t i = 0; i < options.size(); ++i) {
    State next = s;
    for (std::size_t j = 0; j < i; ++j) next.forbidden[static_cast<std::size_t>(options[j])] = 1;
    next.take(options[i]);
    if (search(std::move(next), out)) return true;
  }
  return false;
}

}  // namespace

std::optional<VertexSet> fvs_at_most(const MultiGraph& g, int k) {
  if (k < 0) return std::nullopt;
  State s{g, std::vector<char>(g.id_bound(), 0), k, {}};
  VertexSet out;
  if (!search(std::move(s), out)) return std::nullopt;
  return normalize(out);
}

VertexSet min_fvs(const MultiGraph& g) {
  for (int k = cycle_packing_bound(g);; ++k) {
    if (auto s = fvs_at_most(g, k)) return *s;
  }
}

}  // namespace ifvs
