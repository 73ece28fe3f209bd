#include "ifvs/base_case.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ifvs/errors.hpp"

namespace ifvs {
namespace {

// Arithmetic in GF(p), p = 2^61 - 1.
__extension__ typedef unsigned __int128 Wide;
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t reduce(std::uint64_t x) {
  x = (x & kPrime) + (x >> 61);
  return x >= kPrime ? x - kPrime : x;
}
std::uint64_t add(std::uint64_t a, std::uint64_t b) { return reduce(a + b); }
std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  Wide w = static_cast<Wide>(a) * b;
  auto lo = static_cast<std::uint64_t>(w & kPrime);
  auto hi = static_cast<std::uint64_t>(w >> 61);
  return reduce(lo + hi);
}
std::uint64_t power(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}
std::uint64_t inverse(std::uint64_t a) { return power(a, kPrime - 2); }

using Matrix = std::vector<std::vector<std::uint64_t>>;

int rank_of(Matrix m) {
  const std::size_t n = m.size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t pivot = row;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(m[pivot], m[row]);
    const std::uint64_t inv = inverse(m[row][col]);
    for (std::size_t r = row + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const std::uint64_t f = mul(m[r][col], inv);
      for (std::size_t c = col; c < n; ++c) {
        if (m[row][c] != 0) m[r][c] = sub(m[r][c], mul(f, m[row][c]));
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::uint64_t random_unit(std::mt19937_64& rng) {
  for (;;) {
    std::uint64_t x = rng() >> 3;
    if (x != 0 && x < kPrime) return x;
  }
}

// Sum over `active` of x_i (a_i b_i^T - b_i a_i^T) with fresh random x_i,
// where an edge s-t is the incidence vector e_s - e_t.
Matrix random_skew(const ParityInstance& p, const std::vector<int>& active,
                   std::mt19937_64& rng) {
  const auto n = static_cast<std::size_t>(p.num_nodes);
  Matrix m(n, std::vector<std::uint64_t>(n, 0));
  for (int idx : active) {
    const ParityPair& pair = p.pairs[static_cast<std::size_t>(idx)];
    const std::uint64_t x = random_unit(rng);
    const auto& a = pair.edges[0];
    const auto& b = pair.edges[1];
    // a = e_a0 - e_a1, b = e_b0 - e_b1.
    const std::array<std::pair<int, std::uint64_t>, 2> av{{{a[0], 1}, {a[1], kPrime - 1}}};
    const std::array<std::pair<int, std::uint64_t>, 2> bv{{{b[0], 1}, {b[1], kPrime - 1}}};
    for (const auto& [i, ai] : av) {
      for (const auto& [j, bj] : bv) {
        const std::uint64_t t = mul(x, mul(ai, bj));
        auto ui = static_cast<std::size_t>(i);
        auto uj = static_cast<std::size_t>(j);
        m[ui][uj] = add(m[ui][uj], t);
        m[uj][ui] = sub(m[uj][ui], t);
      }
    }
  }
  return m;
}

int sampled_rank(const ParityInstance& p, const std::vector<int>& active,
                 std::mt19937_64& rng, int samples) {
  int best = 0;
  for (int s = 0; s < std::max(samples, 1); ++s) {
    best = std::max(best, rank_of(random_skew(p, active, rng)));
  }
  return best;
}

// Endpoints of the single edge a serial pair {a-x, x-b} stands for.
std::array<int, 2> serial_edge(const ParityPair& pair) {
  const auto& e = pair.edges[0];
  const auto& f = pair.edges[1];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (e[static_cast<std::size_t>(i)] == f[static_cast<std::size_t>(j)]) {
        return {e[static_cast<std::size_t>(1 - i)], f[static_cast<std::size_t>(1 - j)]};
      }
    }
  }
  throw InternalError("nice parity pair does not share a subdivision node");
}

struct ReferenceSearch {
  const ParityInstance& p;
  std::vector<int> tents;
  std::vector<int> nices;
  std::vector<int> chosen;
  std::vector<int> best;
  int best_size = -1;

  void run(std::size_t i, const UnionFind& uf) {
    if (static_cast<int>(chosen.size() + (tents.size() - i) + nices.size()) <= best_size) return;
    if (i == tents.size()) {
      UnionFind forest = uf;
      std::vector<int> kept = chosen;
      for (int idx : nices) {
        auto [a, b] = serial_edge(p.pairs[static_cast<std::size_t>(idx)]);
        if (forest.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b))) kept.push_back(idx);
      }
      if (static_cast<int>(kept.size()) > best_size) {
        best_size = static_cast<int>(kept.size());
        best = std::move(kept);
      }
      return;
    }
    const ParityPair& pair = p.pairs[static_cast<std::size_t>(tents[i])];
    UnionFind with = uf;
    if (with.unite(static_cast<std::size_t>(pair.edges[0][0]), static_cast<std::size_t>(pair.edges[0][1])) &&
        with.unite(static_cast<std::size_t>(pair.edges[1][0]), static_cast<std::size_t>(pair.edges[1][1]))) {
      chosen.push_back(tents[i]);
      run(i + 1, with);
      chosen.pop_back();
    }
    run(i + 1, uf);
  }
};

}  // namespace

ParityInstance build_parity(const DisInstance& inst) {
  Census census(inst);
  ParityInstance p;
  p.num_nodes = census.rho();
  for (Vertex v : inst.f_set()) {
    const VertexClass& c = census.of(v);
    if (c.kind != VertexKind::kNice && c.kind != VertexKind::kTent) {
      throw InternalError("base case: vertex " + std::to_string(v) +
                          " is neither nice nor a tent");
    }
    std::vector<int> comps;
    for (const Incidence& inc : inst.graph().incident(v)) {
      for (int m = 0; m < inc.multiplicity; ++m) comps.push_back(census.w_component(inc.neighbor));
    }
    if (std::set<int>(comps.begin(), comps.end()).size() != comps.size()) {
      throw InternalError("base case: vertex " + std::to_string(v) +
                          " has two edges into one W-component");
    }
    ParityPair pair;
    pair.origin = v;
    if (c.kind == VertexKind::kNice) {
      const int x = p.num_nodes++;
      pair.kind = ParityPair::Kind::kNice;
      pair.edges = {{{comps[0], x}, {x, comps[1]}}};
    } else {
      pair.kind = ParityPair::Kind::kTent;
      pair.edges = {{{comps[0], comps[1]}, {comps[1], comps[2]}}};
    }
    p.pairs.push_back(pair);
  }
  return p;
}

bool pairs_acyclic(const ParityInstance& p, std::span<const int> chosen) {
  UnionFind uf(static_cast<std::size_t>(p.num_nodes));
  for (int idx : chosen) {
    for (const auto& e : p.pairs[static_cast<std::size_t>(idx)].edges) {
      if (!uf.unite(static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[1]))) return false;
    }
  }
  return true;
}

ParityResult matroid_parity_reference(const ParityInstance& p) {
  ReferenceSearch search{p, {}, {}, {}, {}, -1};
  for (std::size_t i = 0; i < p.pairs.size(); ++i) {
    (p.pairs[i].kind == ParityPair::Kind::kNice ? search.nices : search.tents)
        .push_back(static_cast<int>(i));
  }
  search.run(0, UnionFind(static_cast<std::size_t>(p.num_nodes)));
  ParityResult result;
  result.kept = std::move(search.best);
  std::sort(result.kept.begin(), result.kept.end());
  result.nu = static_cast<int>(result.kept.size());
  return result;
}

std::optional<ParityResult> matroid_parity_algebraic(const ParityInstance& p,
                                                     const AlgebraicOptions& options) {
  std::vector<int> all(p.pairs.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);

  for (int attempt = 0; attempt < std::max(options.attempts, 1); ++attempt) {
    std::mt19937_64 rng(options.seed + 0x632be59bd9b4e019ULL * static_cast<std::uint64_t>(attempt));
    const int rank = sampled_rank(p, all, rng, options.resamples);
    if (rank % 2 != 0) continue;  // skew-symmetric ranks are even

    std::vector<int> active = all;
    for (int idx : all) {
      std::vector<int> trial;
      trial.reserve(active.size());
      for (int a : active) {
        if (a != idx) trial.push_back(a);
      }
      if (sampled_rank(p, trial, rng, 1) >= rank) active = std::move(trial);
    }
    if (static_cast<int>(active.size()) == rank / 2 && pairs_acyclic(p, active)) {
      ParityResult result;
      result.kept = std::move(active);
      result.nu = rank / 2;
      result.rank = rank;
      return result;
    }
  }
  return std::nullopt;
}

ParityResult matroid_parity_max(const ParityInstance& p, const AlgebraicOptions& options) {
  std::optional<ParityResult> algebraic = matroid_parity_algebraic(p, options);
  if (!algebraic) {
    ParityResult ref = matroid_parity_reference(p);
    ref.fell_back = true;
    return ref;
  }
  if (p.pairs.size() <= kCrossCheckPairs) {
    ParityResult ref = matroid_parity_reference(p);
    if (ref.nu > algebraic->nu) {
      ref.fell_back = true;
      return ref;
    }
    if (ref.nu < algebraic->nu) {
      throw InternalError("reference parity solver missed a verified kept set");
    }
  }
  return *algebraic;
}

std::optional<VertexSet> solve_base(const DisInstance& inst, BaseSolver solver) {
  return solve_base_detailed(inst, solver).solution;
}

BaseResult solve_base_detailed(const DisInstance& inst, BaseSolver solver) {
  if (inst.budget() < 0) return {};
  ParityInstance p = build_parity(inst);
  ParityResult result;
  switch (solver) {
    case BaseSolver::kReference:
      result = matroid_parity_reference(p);
      break;
    case BaseSolver::kAlgebraic: {
      auto algebraic = matroid_parity_algebraic(p);
      if (algebraic) {
        result = *algebraic;
      } else {
        result = matroid_parity_reference(p);
        result.fell_back = true;
      }
      break;
    }
    case BaseSolver::kDefault:
      result = matroid_parity_max(p);
      break;
  }
  std::vector<char> kept(p.pairs.size(), 0);
  for (int idx : result.kept) kept[static_cast<std::size_t>(idx)] = 1;
  VertexSet x;
  for (std::size_t i = 0; i < p.pairs.size(); ++i) {
    if (!kept[i]) x.push_back(p.pairs[i].origin);
  }
  normalize(x);
  BaseResult out;
  out.fell_back = result.fell_back;
  if (static_cast<int>(x.size()) <= inst.budget()) out.solution = std::move(x);
  return out;
}

}  // namespace ifvs
