#include "ifvs/reductions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ifvs/errors.hpp"

namespace ifvs {
namespace {

// A place where a rule applies. `other` is only used by rule 2.
struct Site {
  Vertex pivot = kNoVertex;
  Vertex other = kNoVertex;
};

// True when v has two edge occurrences ending in the same W-component.
bool doubles_into_w(const DisInstance& inst, const Census& census, Vertex v) {
  std::map<int, int> hits;
  for (const Incidence& inc : inst.graph().incident(v)) {
    if (!inst.in_w(inc.neighbor)) continue;
    if ((hits[census.w_component(inc.neighbor)] += inc.multiplicity) >= 2) return true;
  }
  return false;
}

std::optional<Site> find_site(const DisInstance& inst, const Census& census, int rule) {
  const MultiGraph& g = inst.graph();
  switch (rule) {
    case 1:
      for (Vertex v : g.vertices()) {
        if (g.degree(v) <= 1) return Site{v};
      }
      return std::nullopt;
    case 2:
      for (Vertex u : g.vertices()) {
        if (!inst.in_f(u) || g.degree(u) != 2) continue;
        if (census.of(u).kind == VertexKind::kNice) continue;
        for (const Incidence& inc : g.incident(u)) {
          Vertex v = inc.neighbor;
          if (v <= u || !inst.in_f(v) || g.degree(v) != 2) continue;
          if (census.of(v).kind == VertexKind::kNice) continue;
          return Site{u, v};
        }
      }
      return std::nullopt;
    case 3: {
      Measure m = census.measure();
      if (m.k < 0 || m.mu() < 0) return Site{};
      return std::nullopt;
    }
    case 4:
    case 5:
      for (Vertex v : g.vertices()) {
        bool candidate = rule == 4 ? inst.in_r(v) : inst.deletable(v);
        if (candidate && doubles_into_w(inst, census, v)) return Site{v};
      }
      return std::nullopt;
    case 6:
      for (Vertex v : g.vertices()) {
        if (!inst.in_r(v)) continue;
        const VertexClass& c = census.of(v);
        if (c.gdeg >= 1 || c.tdeg >= 1) return Site{v};
      }
      return std::nullopt;
    case 7:
      for (Vertex v : g.vertices()) {
        if (!inst.deletable(v)) continue;
        bool any = false;
        bool all_two = true;
        for (const Incidence& inc : g.incident(v)) {
          if (inc.neighbor == v || !inst.deletable(inc.neighbor)) continue;
          any = true;
          if (g.degree(inc.neighbor) != 2) {
            all_two = false;
            break;
          }
        }
        if (any && all_two) return Site{v};
      }
      return std::nullopt;
    default:
      throw std::invalid_argument("reduction rule id must be in 1..7");
  }
}

// The neighbour of a degree-2 vertex d other than `a`.
Vertex other_neighbor(const MultiGraph& g, Vertex d, Vertex a) {
  for (const Incidence& inc : g.incident(d)) {
    if (inc.neighbor != a) return inc.neighbor;
  }
  throw InternalError("rule 2: bypass vertex has no second neighbour");
}

// Rewrites `inst` at `site`. Returns false for the rejecting rules.
bool apply_at(DisInstance& inst, int rule, const Site& site, ReductionOutcome& out) {
  const MultiGraph& g = inst.graph();
  out.rule = rule;
  out.pivot = site.pivot;
  switch (rule) {
    case 1:
      out.touched = {site.pivot};
      inst.delete_vertex(site.pivot);
      return true;
    case 2: {
      Vertex u = site.pivot;
      Vertex v = site.other;
      // Keep the deletable endpoint when exactly one of them is reserved;
      // otherwise drop the smaller id.
      Vertex drop = u;
      if (inst.in_r(u) != inst.in_r(v)) drop = inst.in_r(u) ? u : v;
      Vertex keep = drop == u ? v : u;
      Vertex far = other_neighbor(g, drop, keep);
      if (far == keep || (inst.in_f(far) && g.multiplicity(keep, far) > 0)) {
        throw InternalError("rule 2: bypass would close a cycle inside F");
      }
      out.pivot = drop;
      out.touched = {std::min(keep, far), std::max(keep, far), drop};
      normalize(out.touched);
      inst.delete_vertex(drop);
      inst.add_edge(keep, far);
      return true;
    }
    case 3:
    case 4:
      return false;
    case 5: {
      Vertex v = site.pivot;
      out.forced = {v};
      out.touched = {v};
      for (const Incidence& inc : g.incident(v)) {
        if (inst.in_f(inc.neighbor) && inc.neighbor != v) {
          out.touched.push_back(inc.neighbor);
          inst.reserve(inc.neighbor);
        }
      }
      normalize(out.touched);
      inst.delete_vertex(v);
      inst.set_budget(inst.budget() - 1);
      return true;
    }
    case 6:
      out.touched = {site.pivot};
      inst.move_to_w(site.pivot);
      return true;
    case 7: {
      VertexSet reserved;
      for (const Incidence& inc : g.incident(site.pivot)) {
        if (inc.neighbor != site.pivot && inst.deletable(inc.neighbor)) {
          reserved.push_back(inc.neighbor);
        }
      }
      for (Vertex w : reserved) inst.reserve(w);
      out.touched = std::move(reserved);
      return true;
    }
    default:
      throw std::invalid_argument("reduction rule id must be in 1..7");
  }
}

}  // namespace

ReductionOutcome apply_rule(const DisInstance& inst, int rule) {
  if (rule < 1 || rule > kNumRules) {
    throw std::invalid_argument("reduction rule id must be in 1..7");
  }
  ReductionOutcome out;
  out.rule = rule;
  Census census(inst);
  std::optional<Site> site = find_site(inst, census, rule);
  if (!site) return out;
  DisInstance next = inst;
  if (apply_at(next, rule, *site, out)) {
    out.result = ReductionResult::kReduced;
    out.instance = std::move(next);
  } else {
    out.result = ReductionResult::kRejectNo;
  }
  return out;
}

FixpointResult reduce_to_fixpoint(DisInstance inst, const ReduceOptions& options) {
  FixpointResult result;
  for (;;) {
    Census census(inst);
    const int mu = census.measure().mu();
    if (!result.trace.empty()) result.trace.back().mu_after = mu;

    std::optional<Site> site;
    int rule = 1;
    for (; rule <= kNumRules; ++rule) {
      site = find_site(inst, census, rule);
      if (site) break;
    }
    if (!site) break;

    ReductionOutcome outcome;
    const bool observed = static_cast<bool>(options.observer);
    DisInstance before = observed ? inst : DisInstance{};
    const bool reduced = apply_at(inst, rule, *site, outcome);
    result.trace.push_back(FiringRecord{rule, outcome.pivot, mu, mu});

    if (!reduced) {
      outcome.result = ReductionResult::kRejectNo;
      if (observed) options.observer(before, outcome);
      result.rejected = true;
      result.rejecting_rule = rule;
      break;
    }
    outcome.result = ReductionResult::kReduced;
    result.forced.insert(result.forced.end(), outcome.forced.begin(), outcome.forced.end());
    if (observed) {
      outcome.instance = inst;
      options.observer(before, outcome);
    }
    if (options.validate_each_step) {
      ValidationReport report = validate(inst);
      if (!report.ok()) {
        throw InternalError("rule " + std::to_string(rule) +
                            " broke instance invariant " + report.violations.front());
      }
    }
  }
  normalize(result.forced);
  result.instance = std::move(inst);
  return result;
}

}  // namespace ifvs
