#include "ifvs/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ifvs/pipeline.hpp"
#include "ifvs/reductions.hpp"

namespace ifvs {

int Rng::uniform(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return static_cast<int>(lo + static_cast<std::int64_t>(x % span));
  }
}

bool Rng::chance(int num, int den) { return uniform(0, den - 1) < num; }

namespace {

std::vector<Vertex> shuffled_ids(int n, Rng& rng) {
  std::vector<Vertex> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(rng.uniform(0, i))]);
  }
  return ids;
}

// Attaches each vertex to an earlier one with the given chance.
void random_forest(MultiGraph& g, const std::vector<Vertex>& vs, int permille, Rng& rng) {
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (rng.chance(permille, 1000)) {
      g.add_edge(vs[i], vs[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(i) - 1))]);
    }
  }
}

}  // namespace

MultiGraph random_multigraph(int n, int m, std::uint64_t seed, int loop_permille) {
  if (n < 0 || m < 0) throw std::invalid_argument("negative size");
  if (n == 0 && m > 0) throw std::invalid_argument("edges need vertices");
  Rng rng(seed);
  MultiGraph g(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    const Vertex u = rng.uniform(0, n - 1);
    if (n == 1 || rng.chance(loop_permille, 1000)) {
      g.add_edge(u, u);
      continue;
    }
    Vertex v = rng.uniform(0, n - 2);
    if (v >= u) ++v;
    g.add_edge(u, v);
  }
  return g;
}

PlantedInstance planted(int n, int k, std::uint64_t seed, int attach) {
  if (k < 0 || n - k < 2) throw std::invalid_argument("planted needs k >= 0 and n - k >= 2");
  if (attach != 0 && (attach < 2 || attach > 4)) {
    throw std::invalid_argument("attach must be 0 or in 2..4");
  }
  Rng rng(seed);
  const std::vector<Vertex> ids = shuffled_ids(n, rng);
  const std::vector<Vertex> s(ids.begin(), ids.begin() + k);
  std::vector<Vertex> tree(ids.begin() + k, ids.end());

  PlantedInstance out{MultiGraph(static_cast<std::size_t>(n)), VertexSet(s)};
  random_forest(out.graph, tree, 1000, rng);
  for (Vertex v : s) {
    const int want = std::min(attach == 0 ? rng.uniform(2, 4) : attach, static_cast<int>(tree.size()));
    // Partial Fisher-Yates over the tree vertices picks distinct endpoints.
    for (int i = 0; i < want; ++i) {
      const int j = rng.uniform(i, static_cast<int>(tree.size()) - 1);
      std::swap(tree[static_cast<std::size_t>(i)], tree[static_cast<std::size_t>(j)]);
      out.graph.add_edge(v, tree[static_cast<std::size_t>(i)]);
    }
  }
  normalize(out.witness);
  return out;
}

MultiGraph subdivided(int n, int m, std::uint64_t seed) {
  return subdivide_once(random_multigraph(n, m, seed));
}

DisInstance base_case(int pairs, std::uint64_t seed, int k) {
  if (pairs < 0) throw std::invalid_argument("negative pair count");
  Rng rng(seed);
  const int num_components = rng.uniform(3, std::max(3, pairs + 1));
  MultiGraph g;
  std::vector<std::vector<Vertex>> comps(static_cast<std::size_t>(num_components));
  VertexSet w;
  for (auto& comp : comps) {
    const int size = rng.uniform(1, 3);
    for (int i = 0; i < size; ++i) {
      comp.push_back(g.add_vertex());
      w.push_back(comp.back());
    }
    random_forest(g, comp, 1000, rng);
  }
  std::vector<int> order(static_cast<std::size_t>(num_components));
  for (int p = 0; p < pairs; ++p) {
    const int arity = rng.chance(1, 2) ? 2 : 3;
    std::iota(order.begin(), order.end(), 0);
    const Vertex v = g.add_vertex();
    for (int i = 0; i < arity; ++i) {
      const int j = rng.uniform(i, num_components - 1);
      std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
      const auto& comp = comps[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
      g.add_edge(v, comp[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(comp.size()) - 1))]);
    }
  }
  if (k < 0) k = rng.uniform(0, pairs);
  return DisInstance(std::move(g), w, {}, k);
}

DisInstance random_dis_instance(const DisParams& params, std::uint64_t seed) {
  if (params.w_vertices < 0 || params.f_vertices < 0 || params.cross_edges < 0) {
    throw std::invalid_argument("negative size");
  }
  Rng rng(seed);
  const std::vector<Vertex> ids = shuffled_ids(params.w_vertices + params.f_vertices, rng);
  const std::vector<Vertex> w(ids.begin(), ids.begin() + params.w_vertices);
  const std::vector<Vertex> f(ids.begin() + params.w_vertices, ids.end());
  MultiGraph g(ids.size());
  random_forest(g, w, params.tree_permille, rng);
  random_forest(g, f, params.tree_permille, rng);
  if (!w.empty() && !f.empty()) {
    for (int i = 0; i < params.cross_edges; ++i) {
      g.add_edge(f[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(f.size()) - 1))],
                 w[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(w.size()) - 1))]);
    }
  }
  VertexSet r;
  for (Vertex v : f) {
    if (rng.chance(params.reserve_permille, 1000)) r.push_back(v);
  }
  const int free_count = static_cast<int>(f.size() - r.size());
  const int k = params.k >= 0 ? params.k : rng.uniform(0, free_count);
  VertexSet ws(w);
  return DisInstance(std::move(g), normalize(ws), normalize(r), k);
}

namespace {

constexpr int kGadgetAttempts = 20000;

DisParams gadget_params(Rng& rng) {
  DisParams p;
  p.w_vertices = rng.uniform(2, 5);
  p.f_vertices = rng.uniform(3, 8);
  p.cross_edges = rng.uniform(3, 10);
  p.reserve_permille = 300;
  return p;
}

std::optional<Gadget> nice_to_w(const DisInstance& inst) {
  std::optional<Gadget> found;
  ReduceOptions options;
  options.observer = [&](const DisInstance& before, const ReductionOutcome& outcome) {
    if (found || outcome.rule != 6) return;
    const VertexClass c = classify(before, outcome.pivot);
    if (c.deg_w == 0 && c.ndeg >= 1) found = Gadget{before, outcome.pivot};
  };
  reduce_to_fixpoint(inst, options);
  return found;
}

std::optional<Gadget> tent_neighbor(const DisInstance& inst) {
  FixpointResult fix = reduce_to_fixpoint(inst);
  if (fix.rejected) return std::nullopt;
  const DisInstance& red = fix.instance;
  Census census(red);
  for (Vertex v : red.deletable_set()) {
    const VertexClass& c = census.of(v);
    if (c.kind == VertexKind::kPlain || c.kind == VertexKind::kPTent) {
      if (c.tdeg >= 1) return Gadget{red, v};
    }
  }
  return std::nullopt;
}

}  // namespace

Gadget gadget(GadgetKind kind, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < kGadgetAttempts; ++attempt) {
    const DisParams params = gadget_params(rng);
    const DisInstance inst = random_dis_instance(params, rng.next());
    std::optional<Gadget> g =
        kind == GadgetKind::kNiceToW ? nice_to_w(inst) : tent_neighbor(inst);
    if (g) return *g;
  }
  throw std::runtime_error("no gadget found within the search cap");
}

GadgetKind parse_gadget_kind(const std::string& name) {
  if (name == "nice-to-w") return GadgetKind::kNiceToW;
  if (name == "tent-neighbor") return GadgetKind::kTentNeighbor;
  throw std::invalid_argument("unknown gadget kind: " + name);
}

}  // namespace ifvs
