#include "ifvs/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace ifvs {

DisInstance::DisInstance(MultiGraph g, const VertexSet& w, const VertexSet& r, int k)
    : g_(std::move(g)), side_(g_.id_bound(), Side::kAbsent), k_(k) {
  for (Vertex v : g_.vertices()) side_[static_cast<std::size_t>(v)] = Side::kFree;
  for (Vertex v : w) {
    if (!g_.contains(v)) {
      throw std::invalid_argument("W names unknown vertex " + std::to_string(v));
    }
    side_[static_cast<std::size_t>(v)] = Side::kW;
  }
  for (Vertex v : r) {
    if (!g_.contains(v)) {
      throw std::invalid_argument("R names unknown vertex " + std::to_string(v));
    }
    if (side_[static_cast<std::size_t>(v)] == Side::kW) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " is in both W and R");
    }
    side_[static_cast<std::size_t>(v)] = Side::kReserved;
  }
}

namespace {

template <typename Pred>
VertexSet collect(const MultiGraph& g, Pred pred) {
  VertexSet out;
  for (Vertex v : g.vertices()) {
    if (pred(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

VertexSet DisInstance::w_set() const {
  return collect(g_, [&](Vertex v) { return in_w(v); });
}
VertexSet DisInstance::f_set() const {
  return collect(g_, [&](Vertex v) { return in_f(v); });
}
VertexSet DisInstance::r_set() const {
  return collect(g_, [&](Vertex v) { return in_r(v); });
}
VertexSet DisInstance::deletable_set() const {
  return collect(g_, [&](Vertex v) { return deletable(v); });
}

void DisInstance::delete_vertex(Vertex v) {
  g_.remove_vertex(v);
  side_[static_cast<std::size_t>(v)] = Side::kAbsent;
}

void DisInstance::add_edge(Vertex u, Vertex v, int multiplicity) {
  g_.add_edge(u, v, multiplicity);
}

void DisInstance::move_to_w(Vertex v) {
  if (!in_f(v)) throw std::invalid_argument("move_to_w: vertex is not in F");
  side_[static_cast<std::size_t>(v)] = Side::kW;
}

void DisInstance::reserve(Vertex v) {
  if (!in_f(v)) throw std::invalid_argument("reserve: vertex is not in F");
  side_[static_cast<std::size_t>(v)] = Side::kReserved;
}

const char* to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::kPlain: return "plain";
    case VertexKind::kNice: return "nice";
    case VertexKind::kTent: return "tent";
    case VertexKind::kPNice: return "p-nice";
    case VertexKind::kPTent: return "p-tent";
  }
  return "?";
}

Census::Census(const DisInstance& inst)
    : w_comp_(inst.graph().id_bound(), -1),
      cls_(inst.graph().id_bound()),
      k_(inst.budget()) {
  const MultiGraph& g = inst.graph();
  const VertexSet all = g.vertices();

  std::vector<Vertex> stack;
  for (Vertex s : all) {
    if (!inst.in_w(s) || w_comp_[static_cast<std::size_t>(s)] >= 0) continue;
    w_comp_[static_cast<std::size_t>(s)] = rho_;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incident(u)) {
        auto w = static_cast<std::size_t>(inc.neighbor);
        if (inst.in_w(inc.neighbor) && w_comp_[w] < 0) {
          w_comp_[w] = rho_;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++rho_;
  }

  // Degrees and the kinds that depend only on them.
  for (Vertex v : all) {
    if (!inst.in_f(v)) continue;
    VertexClass& c = cls_[static_cast<std::size_t>(v)];
    for (const Incidence& inc : g.incident(v)) {
      int m = inc.neighbor == v ? 2 * inc.multiplicity : inc.multiplicity;
      c.deg += m;
      if (inst.in_w(inc.neighbor)) {
        c.deg_w += m;
      } else {
        c.deg_f += m;
      }
    }
    if (!inst.deletable(v)) continue;
    if (c.deg_f == 0 && c.deg_w == 2) {
      c.kind = VertexKind::kNice;
      ++eta_;
    } else if (c.deg_f == 0 && c.deg_w == 3) {
      c.kind = VertexKind::kTent;
      ++tau_;
    } else if (c.deg == 2 && c.deg_w == 1) {
      c.kind = VertexKind::kPNice;
    }
  }

  for (Vertex v : all) {
    if (!inst.in_f(v)) continue;
    VertexClass& c = cls_[static_cast<std::size_t>(v)];
    for (const Incidence& inc : g.incident(v)) {
      if (inc.neighbor != v && inst.in_f(inc.neighbor) &&
          cls_[static_cast<std::size_t>(inc.neighbor)].kind == VertexKind::kPNice) {
        ++c.ndeg;
      }
    }
    c.gdeg = c.ndeg + c.deg_w;
  }

  for (Vertex v : all) {
    if (!inst.deletable(v)) continue;
    VertexClass& c = cls_[static_cast<std::size_t>(v)];
    if (c.kind == VertexKind::kPlain && c.gdeg == 2 && c.deg == 3) c.kind = VertexKind::kPTent;
  }

  for (Vertex v : all) {
    if (!inst.in_f(v)) continue;
    VertexClass& c = cls_[static_cast<std::size_t>(v)];
    for (const Incidence& inc : g.incident(v)) {
      if (inc.neighbor != v && inst.in_f(inc.neighbor) &&
          cls_[static_cast<std::size_t>(inc.neighbor)].kind == VertexKind::kPTent) {
        ++c.tdeg;
      }
    }
  }
}

VertexClass classify(const DisInstance& inst, Vertex v) {
  if (!inst.in_f(v)) {
    throw std::invalid_argument("classify: vertex " + std::to_string(v) +
                                " is not in F");
  }
  return Census(inst).of(v);
}

Measure measure(const DisInstance& inst) { return Census(inst).measure(); }

bool ValidationReport::has(const std::string& name) const {
  return std::find(violations.begin(), violations.end(), name) != violations.end();
}

ValidationReport validate(const DisInstance& inst) {
  ValidationReport report;
  const MultiGraph& g = inst.graph();
  const VertexSet f = inst.f_set();
  for (Vertex v : f) {
    if (g.has_loop(v)) {
      report.violations.emplace_back("loop-in-F");
      break;
    }
  }
  if (!is_forest(g, f)) report.violations.emplace_back("F-not-forest");
  if (!is_forest(g, inst.w_set())) report.violations.emplace_back("W-not-forest");
  return report;
}

bool check_solution(const MultiGraph& g, const VertexSet& s, int k) {
  VertexSet sorted = s;
  normalize(sorted);
  if (static_cast<long>(sorted.size()) > static_cast<long>(k)) return false;
  for (Vertex v : sorted) {
    if (!g.contains(v)) return false;
  }
  for (Vertex v : sorted) {
    for (const Incidence& inc : g.incident(v)) {
      if (inc.neighbor != v && contains(sorted, inc.neighbor)) return false;
    }
  }
  return is_forest(without(g, sorted));
}

}  // namespace ifvs
