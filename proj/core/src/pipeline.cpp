#include "ifvs/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "ifvs/bounds.hpp"
#include "ifvs/errors.hpp"
#include "ifvs/fvs.hpp"

namespace ifvs {
namespace {

constexpr std::size_t kMaxGuessBits = 24;

bool independent(const MultiGraph& g, const VertexSet& s) {
  for (Vertex v : s) {
    for (const Incidence& inc : g.incident(v)) {
      if (inc.neighbor != v && contains(s, inc.neighbor)) return false;
    }
  }
  return true;
}

// Masks over `free_count` bits with `ones` bits set, in lexicographic order
// of the chosen index sequences.
std::vector<std::uint32_t> combinations(std::size_t free_count, std::size_t ones) {
  std::vector<std::uint32_t> out;
  std::vector<std::size_t> idx(ones);
  for (std::size_t i = 0; i < ones; ++i) idx[i] = i;
  for (;;) {
    std::uint32_t mask = 0;
    for (std::size_t i : idx) mask |= std::uint32_t{1} << i;
    out.push_back(mask);
    std::size_t i = ones;
    while (i > 0 && idx[i - 1] == free_count - ones + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < ones; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

struct GuessOutcome {
  bool evaluated = false;
  std::optional<VertexSet> solution;
  GuessTrace trace;
};

class GuessRunner {
 public:
  GuessRunner(const MultiGraph& g, const VertexSet& z, const SolveOptions& options)
      : g_(g), z_(z), options_(options) {
    for (Vertex v : g.vertices()) {
      if (!contains(z, v)) forest_side_.push_back(v);
    }
  }

  GuessOutcome run(const VertexSet& guess, int budget) const {
    GuessOutcome out;
    VertexSet w;
    std::set_difference(z_.begin(), z_.end(), guess.begin(), guess.end(), std::back_inserter(w));
    if (!independent(g_, guess) || !is_forest(g_, w)) return out;

    VertexSet r;
    for (Vertex v : guess) {
      for (const Incidence& inc : g_.incident(v)) {
        if (contains(forest_side_, inc.neighbor)) r.push_back(inc.neighbor);
      }
    }
    normalize(r);

    DisInstance inst(without(g_, guess), w, r, budget - static_cast<int>(guess.size()));
    EngineOptions engine = options_.engine;
    engine.record_trace = engine.record_trace || options_.record_trace;
    DisjointResult res = solve_disjoint(inst, engine);

    out.evaluated = true;
    if (res.solution) {
      VertexSet full = guess;
      full.insert(full.end(), res.solution->begin(), res.solution->end());
      out.solution = normalize(full);
    }
    out.trace.guess = guess;
    out.trace.w = std::move(w);
    out.trace.r = std::move(r);
    out.trace.budget = inst.budget();
    out.trace.stats = res.stats;
    if (engine.record_trace) out.trace.trace = std::move(res.trace);
    return out;
  }

 private:
  const MultiGraph& g_;
  const VertexSet& z_;
  const SolveOptions& options_;
  VertexSet forest_side_;
};

bool better(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

IfvsResult solve_ifvs(const MultiGraph& g, int k, const SolveOptions& options) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  IfvsResult result;

  // A vertex with a loop belongs to every solution.
  VertexSet looped;
  for (Vertex v : g.vertices()) {
    if (g.has_loop(v)) looped.push_back(v);
  }
  if (static_cast<int>(looped.size()) > k || !independent(g, looped)) return result;

  VertexSet z;
  if (options.external_fvs) {
    z = *options.external_fvs;
    normalize(z);
    for (Vertex v : z) {
      if (!g.contains(v)) throw std::invalid_argument("external FVS names an unknown vertex");
    }
    if (!is_forest(without(g, z))) {
      throw std::invalid_argument("external set is not a feedback vertex set");
    }
  } else {
    std::optional<VertexSet> found = fvs_at_most(g, k);
    if (!found) return result;
    z = std::move(*found);
  }
  result.stats.fvs_size = static_cast<int>(z.size());
  if (z.size() > kMaxGuessBits) {
    throw std::invalid_argument("feedback vertex set too large to enumerate guesses");
  }

  // Guesses always contain the looped vertices; the rest is enumerated.
  VertexSet optional_part;
  for (Vertex v : z) {
    if (!contains(looped, v)) optional_part.push_back(v);
  }
  if (optional_part.size() + looped.size() != z.size()) {
    throw InternalError("feedback vertex set misses a looped vertex");
  }

  GuessRunner runner(g, z, options);
  const int threads = std::max(1, options.threads);
  std::optional<VertexSet> best;
  std::vector<GuessTrace> traces;

  const std::size_t max_extra =
      std::min(optional_part.size(), static_cast<std::size_t>(k) - looped.size());
  for (std::size_t extra = 0; extra <= max_extra; ++extra) {
    const std::vector<std::uint32_t> masks = combinations(optional_part.size(), extra);
    std::vector<GuessOutcome> outcomes(masks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_yes{masks.size()};
    // In minimize mode a known solution caps the budget of later guesses.
    std::atomic<int> cap{best ? static_cast<int>(best->size()) : k};

    auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= masks.size()) return;
        if (!options.minimize && i > first_yes.load()) continue;
        VertexSet guess = looped;
        for (std::size_t b = 0; b < optional_part.size(); ++b) {
          if (masks[i] >> b & 1U) guess.push_back(optional_part[b]);
        }
        normalize(guess);
        const int budget = options.minimize ? std::min(k, cap.load()) : k;
        if (static_cast<int>(guess.size()) > budget) continue;
        outcomes[i] = runner.run(guess, budget);
        if (outcomes[i].solution) {
          if (options.minimize) {
            int size = static_cast<int>(outcomes[i].solution->size());
            int cur = cap.load();
            while (size < cur && !cap.compare_exchange_weak(cur, size)) {}
          } else {
            std::size_t cur = first_yes.load();
            while (i < cur && !first_yes.compare_exchange_weak(cur, i)) {}
          }
        }
      }
    };
    if (threads == 1 || masks.size() == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      const auto count = std::min<std::size_t>(static_cast<std::size_t>(threads), masks.size());
      for (std::size_t t = 0; t < count; ++t) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      GuessOutcome& o = outcomes[i];
      if (!o.evaluated) continue;
      if (!options.minimize && i > first_yes.load()) continue;
      SolveStats& st = result.stats;
      const EngineStats& es = o.trace.stats;
      ++st.guesses_tried;
      st.branch_nodes += es.nodes;
      st.max_mu = std::max(st.max_mu, es.max_mu);
      st.mu0 = std::max(st.mu0, es.mu0);
      st.leaves += es.leaves;
      st.vector_violations += es.vector_violations;
      if (es.mu0 >= 0) {
        const std::uint64_t bound = leaf_bound(es.mu0);
        st.fib_bound += bound;
        if (static_cast<std::uint64_t>(es.leaves) > bound) ++st.leaf_bound_violations;
      }
      if (o.solution && (!best || better(*o.solution, *best))) best = std::move(o.solution);
      if (options.record_trace) traces.push_back(std::move(o.trace));
    }
    if (best && !options.minimize) break;
  }

  if (best) {
    if (!check_solution(g, *best, k)) {
      throw InternalError("pipeline produced a set that is not an independent FVS");
    }
    result.solution = std::move(best);
  }
  result.guesses = std::move(traces);
  return result;
}

MultiGraph subdivide_once(const MultiGraph& g) {
  MultiGraph h(g.id_bound());
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.id_bound(); ++v) {
    if (!g.contains(v)) h.remove_vertex(v);
  }
  for (const Edge& e : g.edges()) {
    for (int copy = 0; copy < e.multiplicity; ++copy) {
      if (e.u == e.v) {
        Vertex a = h.add_vertex();
        Vertex b = h.add_vertex();
        h.add_edge(e.u, a);
        h.add_edge(a, b);
        h.add_edge(b, e.u);
      } else {
        Vertex s = h.add_vertex();
        h.add_edge(e.u, s);
        h.add_edge(s, e.v);
      }
    }
  }
  return h;
}

}  // namespace ifvs
