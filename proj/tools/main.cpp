#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef IFVS_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "ifvs/bounds.hpp"
#include "ifvs/branching.hpp"
#include "ifvs/errors.hpp"
#include "ifvs/generators.hpp"
#include "ifvs/io.hpp"
#include "ifvs/oracle.hpp"
#include "ifvs/pipeline.hpp"

namespace {

using namespace ifvs;

enum Exit { kYes = 0, kNo = 1, kInputError = 2, kInternal = 3 };

// Input problems get exit code 2, everything else bubbling up is internal.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  try {
    return read_file(path);
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

// A disjoint instance solved directly, dressed up as a pipeline result so
// that both paths share the output code.
IfvsResult as_result(const DisInstance& inst, const DisjointResult& r) {
  IfvsResult out;
  out.solution = r.solution;
  out.stats.fvs_size = static_cast<int>(inst.w_set().size());
  out.stats.guesses_tried = 1;
  out.stats.branch_nodes = r.stats.nodes;
  out.stats.max_mu = r.stats.max_mu;
  out.stats.mu0 = r.stats.mu0;
  out.stats.leaves = r.stats.leaves;
  out.stats.vector_violations = r.stats.vector_violations;
  if (r.stats.mu0 >= 0) out.stats.fib_bound = leaf_bound(r.stats.mu0);
  GuessTrace gt;
  gt.w = inst.w_set();
  gt.r = inst.r_set();
  gt.budget = inst.budget();
  gt.stats = r.stats;
  gt.trace = r.trace;
  out.guesses.push_back(std::move(gt));
  return out;
}

int print_result(const IfvsResult& r, bool json) {
  if (json) {
    std::cout << result_json(r, 2) << '\n';
  } else if (r.solution) {
    std::cout << "yes " << r.solution->size() << '\n' << emit_solution(*r.solution);
  } else {
    std::cout << "no\n";
  }
  return r.solution ? kYes : kNo;
}

struct SolveArgs {
  std::string input;
  int k = -1;
  bool minimize = false;
  std::string trace;
  std::string fvs;
  int threads = 1;
  bool json = false;
};

int run_solve(const SolveArgs& a) {
  ParsedInput in;
  try {
    in = parse_input(slurp(a.input));
  } catch (const ParseError& e) {
    throw InputError(a.input + ": " + e.what());
  }
  IfvsResult result;
  const bool want_trace = !a.trace.empty();
  if (auto* inst = std::get_if<DisInstance>(&in)) {
    if (a.k >= 0) inst->set_budget(a.k);
    if (!validate(*inst).ok()) throw InputError("instance violates " + validate(*inst).violations.front());
    EngineOptions opt;
    opt.record_trace = want_trace;
    result = as_result(*inst, solve_disjoint(*inst, opt));
  } else {
    const MultiGraph& g = std::get<MultiGraph>(in);
    if (a.k < 0) throw InputError("--k is required for graph inputs");
    SolveOptions opt;
    opt.minimize = a.minimize;
    opt.threads = a.threads;
    opt.record_trace = want_trace;
    if (!a.fvs.empty()) {
      const std::string prefix = "external:";
      if (a.fvs.rfind(prefix, 0) != 0) throw InputError("--fvs expects external:FILE");
      try {
        opt.external_fvs = parse_solution(slurp(a.fvs.substr(prefix.size())));
      } catch (const ParseError& e) {
        throw InputError(std::string("fvs file: ") + e.what());
      }
    }
    try {
      result = solve_ifvs(g, a.k, opt);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (want_trace) {
    std::ofstream out(a.trace);
    if (!out) throw InputError("cannot write " + a.trace);
    write_trace_jsonl(out, result);
  }
  return print_result(result, a.json);
}

int run_oracle(const std::string& input, int k, bool json) {
  ParsedInput in;
  try {
    in = parse_input(slurp(input));
  } catch (const ParseError& e) {
    throw InputError(input + ": " + e.what());
  }
  IfvsResult result;
  try {
    if (auto* inst = std::get_if<DisInstance>(&in)) {
      if (k >= 0) inst->set_budget(k);
      result.solution = oracle_disjoint(*inst);
    } else {
      if (k < 0) throw InputError("--k is required for graph inputs");
      result.solution = oracle_ifvs(std::get<MultiGraph>(in), k);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return print_result(result, json);
}

struct GenArgs {
  std::string kind;
  int n = 0;
  int m = -1;
  int k = -1;
  std::uint64_t seed = 0;
  std::string scenario = "nice-to-w";
  std::string out;
};

int run_gen(const GenArgs& a) {
  std::string text;
  const int m = a.m >= 0 ? a.m : 2 * a.n;
  std::vector<std::string> comments{"kind " + a.kind, "seed " + std::to_string(a.seed)};
  try {
    if (a.kind == "random") {
      if (a.k >= 0) comments.push_back("k " + std::to_string(a.k));
      text = emit_graph(random_multigraph(a.n, m, a.seed), comments);
    } else if (a.kind == "planted") {
      if (a.k < 0) throw InputError("planted needs --k");
      PlantedInstance p = planted(a.n, a.k, a.seed);
      comments.push_back("k " + std::to_string(a.k));
      std::string witness = emit_solution(p.witness);
      witness.pop_back();
      comments.push_back("witness " + witness);
      text = emit_graph(p.graph, comments);
    } else if (a.kind == "subdivided") {
      if (a.k >= 0) comments.push_back("k " + std::to_string(a.k));
      text = emit_graph(subdivided(a.n, m, a.seed), comments);
    } else if (a.kind == "base-case") {
      text = emit_dis_instance(base_case(a.n, a.seed, a.k));
    } else if (a.kind == "gadget") {
      Gadget g = gadget(parse_gadget_kind(a.scenario), a.seed);
      // The file renumbers vertices densely, so name the subject by rank.
      const VertexSet vs = g.instance.graph().vertices();
      const auto rank = std::lower_bound(vs.begin(), vs.end(), g.subject) - vs.begin();
      text = "c subject " + std::to_string(rank + 1) + "\n" + emit_dis_instance(g.instance);
    } else {
      throw InputError("unknown --kind " + a.kind);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  write_text(a.out, text);
  return kYes;
}

int run_verify(const std::string& input, const std::string& solution, int k) {
  VertexSet s;
  ParsedInput in;
  try {
    in = parse_input(slurp(input));
    s = parse_solution(slurp(solution));
  } catch (const ParseError& e) {
    throw InputError(e.what());
  }
  const MultiGraph& g = std::visit(
      [](const auto& x) -> const MultiGraph& {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, MultiGraph>) {
          return x;
        } else {
          return x.graph();
        }
      },
      in);
  for (Vertex v : s) {
    if (!g.contains(v)) throw InputError("solution names vertex " + std::to_string(v + 1) + " outside the graph");
  }
  bool ok = false;
  if (auto* inst = std::get_if<DisInstance>(&in)) {
    const int budget = k >= 0 ? k : inst->budget();
    ok = check_solution(inst->graph(), s, budget);
    for (Vertex v : s) ok = ok && inst->deletable(v);
  } else {
    if (k < 0) throw InputError("--k is required for graph inputs");
    ok = check_solution(g, s, k);
  }
  std::cout << (ok ? "valid" : "invalid") << '\n';
  return ok ? kYes : kNo;
}

int run_bench(const std::string& suite, const std::string& out_path, int default_k, bool minimize,
              int threads) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(suite)) throw InputError(suite + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(suite)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write " + out_path);
  out << "instance,n,m,k,fvs_size,mu0,branch_nodes,leaves,fib_bound,time_ms,status\n";
  for (const fs::path& file : files) {
    GraphDocument doc;
    try {
      doc = parse_graph_document(slurp(file.string()));
    } catch (const ParseError& e) {
      std::cerr << "skipping " << file.string() << ": " << e.what() << '\n';
      continue;
    }
    const int k = comment_int(doc.comments, "k").value_or(default_k);
    if (k < 0) {
      std::cerr << "skipping " << file.string() << ": no 'c k <int>' line and no --k\n";
      continue;
    }
    SolveOptions opt;
    opt.minimize = minimize;
    opt.threads = threads;
    const auto start = std::chrono::steady_clock::now();
    const IfvsResult r = solve_ifvs(doc.graph, k, opt);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out << file.filename().string() << ',' << doc.graph.num_vertices() << ','
        << doc.graph.num_edges() << ',' << k << ',' << r.stats.fvs_size << ',' << r.stats.mu0
        << ',' << r.stats.branch_nodes << ',' << r.stats.leaves << ',' << r.stats.fib_bound << ','
        << ms << ',' << (r.solution ? "yes" : "no") << '\n';
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for independent feedback vertex set"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a graph or disjoint instance");
  solve_cmd->add_option("--input", solve.input, "Graph (p ifvs) or instance (p disifvs) file")->required();
  solve_cmd->add_option("--k", solve.k, "Solution size bound; overrides the budget of p disifvs files");
  solve_cmd->add_flag("--minimize", solve.minimize, "Return a minimum solution");
  solve_cmd->add_option("--trace", solve.trace, "Write a JSONL search trace");
  solve_cmd->add_option("--fvs", solve.fvs, "Use a given feedback vertex set: external:FILE");
  solve_cmd->add_option("--threads", solve.threads, "Worker threads")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--json", solve.json, "Print the result as JSON");

  std::string oracle_input;
  int oracle_k = -1;
  bool oracle_json = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force answer for small inputs");
  oracle_cmd->add_option("--input", oracle_input)->required();
  oracle_cmd->add_option("--k", oracle_k);
  oracle_cmd->add_flag("--json", oracle_json);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--kind", gen.kind)
      ->required()
      ->check(CLI::IsMember({"random", "planted", "subdivided", "base-case", "gadget"}));
  gen_cmd->add_option("--n", gen.n, "Vertices (pairs for base-case)");
  gen_cmd->add_option("--m", gen.m, "Edge occurrences (default 2n)");
  gen_cmd->add_option("--k", gen.k);
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--scenario", gen.scenario, "Gadget scenario")
      ->check(CLI::IsMember({"nice-to-w", "tent-neighbor"}));
  gen_cmd->add_option("--out", gen.out)->required();

  std::string verify_input;
  std::string verify_solution;
  int verify_k = -1;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution; exit 0 iff valid");
  verify_cmd->add_option("--input", verify_input)->required();
  verify_cmd->add_option("--solution", verify_solution)->required();
  verify_cmd->add_option("--k", verify_k);

  std::string bench_suite;
  std::string bench_out;
  int bench_k = -1;
  bool bench_minimize = false;
  int bench_threads = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Solve every graph in a directory, write CSV");
  bench_cmd->add_option("--suite", bench_suite)->required();
  bench_cmd->add_option("--out", bench_out)->required();
  bench_cmd->add_option("--k", bench_k, "Bound for files without a 'c k <int>' line");
  bench_cmd->add_flag("--minimize", bench_minimize);
  bench_cmd->add_option("--threads", bench_threads)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kYes : kInputError;
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*oracle_cmd) return run_oracle(oracle_input, oracle_k, oracle_json);
    if (*gen_cmd) return run_gen(gen);
    if (*verify_cmd) return run_verify(verify_input, verify_solution, verify_k);
    if (*bench_cmd) return run_bench(bench_suite, bench_out, bench_k, bench_minimize, bench_threads);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInputError;
}
