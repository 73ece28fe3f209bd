#include "ifvs/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ifvs/errors.hpp"

namespace ifvs {
namespace {

using Json = nlohmann::ordered_json;

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

struct RawDocument {
  std::string kind;
  int n = 0;
  int m = 0;
  MultiGraph graph;
  std::vector<std::string> comments;
  VertexSet w;
  VertexSet r;
  std::optional<int> k;
};

RawDocument parse_raw(std::string_view text) {
  RawDocument doc;
  bool have_header = false;
  int edges = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const std::vector<std::string_view> tok = split(line);
    if (tok.empty()) continue;
    if (tok[0] == "c") {
      const std::size_t start = line.find('c') + 1;
      std::string_view rest = line.substr(start);
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
      doc.comments.emplace_back(rest);
      continue;
    }
    auto expect_args = [&](std::size_t count) {
      if (tok.size() != count + 1) {
        throw ParseError(line_no, "'" + std::string(tok[0]) + "' takes " + std::to_string(count) +
                                      " argument(s)");
      }
    };
    auto vertex = [&](std::string_view t) {
      const int id = to_int(t, line_no);
      if (id < 1 || id > doc.n) {
        throw ParseError(line_no, "vertex " + std::string(t) + " out of range 1.." + std::to_string(doc.n));
      }
      return static_cast<Vertex>(id - 1);
    };
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      expect_args(3);
      if (tok[1] != "ifvs" && tok[1] != "disifvs") {
        throw ParseError(line_no, "unknown problem '" + std::string(tok[1]) + "'");
      }
      doc.kind = std::string(tok[1]);
      doc.n = to_int(tok[2], line_no);
      doc.m = to_int(tok[3], line_no);
      if (doc.n < 0 || doc.m < 0) throw ParseError(line_no, "negative size in header");
      doc.graph = MultiGraph(static_cast<std::size_t>(doc.n));
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "expected header 'p ifvs <n> <m>'");
    if (tok[0] == "e") {
      expect_args(2);
      doc.graph.add_edge(vertex(tok[1]), vertex(tok[2]));
      ++edges;
    } else if (doc.kind == "disifvs" && (tok[0] == "W" || tok[0] == "R")) {
      expect_args(1);
      (tok[0] == "W" ? doc.w : doc.r).push_back(vertex(tok[1]));
    } else if (doc.kind == "disifvs" && tok[0] == "k") {
      expect_args(1);
      if (doc.k) throw ParseError(line_no, "duplicate budget line");
      doc.k = to_int(tok[1], line_no);
    } else {
      throw ParseError(line_no, "unexpected line '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (edges != doc.m) {
    throw ParseError(line_no, "header announces " + std::to_string(doc.m) + " edges, found " +
                                  std::to_string(edges));
  }
  normalize(doc.w);
  normalize(doc.r);
  return doc;
}

DisInstance to_dis_instance(RawDocument doc, int line) {
  if (!doc.k) throw ParseError(line, "missing budget line 'k <int>'");
  for (Vertex v : doc.w) {
    if (contains(doc.r, v)) throw ParseError(line, "vertex " + std::to_string(v + 1) + " is in both W and R");
  }
  return DisInstance(std::move(doc.graph), doc.w, doc.r, *doc.k);
}

int count_lines(std::string_view text) {
  return static_cast<int>(std::count(text.begin(), text.end(), '\n')) + 1;
}

Json one_indexed(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v + 1);
  return out;
}

}  // namespace

GraphDocument parse_graph_document(std::string_view text) {
  RawDocument doc = parse_raw(text);
  if (doc.kind != "ifvs") throw ParseError(1, "expected 'p ifvs' header");
  return GraphDocument{std::move(doc.graph), std::move(doc.comments)};
}

MultiGraph parse_graph(std::string_view text) { return parse_graph_document(text).graph; }

DisInstance parse_dis_instance(std::string_view text) {
  RawDocument doc = parse_raw(text);
  if (doc.kind != "disifvs") throw ParseError(1, "expected 'p disifvs' header");
  return to_dis_instance(std::move(doc), count_lines(text));
}

ParsedInput parse_input(std::string_view text) {
  RawDocument doc = parse_raw(text);
  if (doc.kind == "ifvs") return std::move(doc.graph);
  return to_dis_instance(std::move(doc), count_lines(text));
}

std::optional<int> comment_int(const std::vector<std::string>& comments, std::string_view key) {
  for (const std::string& c : comments) {
    const std::vector<std::string_view> tok = split(c);
    if (tok.size() == 2 && tok[0] == key) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), value);
      if (ec == std::errc() && ptr == tok[1].data() + tok[1].size()) return value;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<int> dense_labels(const MultiGraph& g) {
  std::vector<int> label(g.id_bound(), 0);
  int next = 1;
  for (Vertex v : g.vertices()) label[static_cast<std::size_t>(v)] = next++;
  return label;
}

void emit_edges(std::ostringstream& out, const MultiGraph& g, const std::vector<int>& label) {
  for (const Edge& e : g.edges()) {
    for (int i = 0; i < e.multiplicity; ++i) {
      out << "e " << label[static_cast<std::size_t>(e.u)] << ' ' << label[static_cast<std::size_t>(e.v)]
          << '\n';
    }
  }
}

}  // namespace

std::string emit_graph(const MultiGraph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "c " << c << '\n';
  out << "p ifvs " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  emit_edges(out, g, dense_labels(g));
  return out.str();
}

std::string emit_dis_instance(const DisInstance& inst) {
  const MultiGraph& g = inst.graph();
  const std::vector<int> label = dense_labels(g);
  std::ostringstream out;
  out << "p disifvs " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  emit_edges(out, g, label);
  for (Vertex v : inst.w_set()) out << "W " << label[static_cast<std::size_t>(v)] << '\n';
  for (Vertex v : inst.r_set()) out << "R " << label[static_cast<std::size_t>(v)] << '\n';
  out << "k " << inst.budget() << '\n';
  return out.str();
}

VertexSet parse_solution(std::string_view text) {
  VertexSet out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::vector<std::string_view> tok = split(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "no") throw ParseError(line_no, "file reports that no solution exists");
    if (tok[0] == "yes") continue;  // status line of `ifvs solve`
    for (std::string_view t : tok) {
      const int id = to_int(t, line_no);
      if (id < 1) throw ParseError(line_no, "vertex ids start at 1");
      out.push_back(id - 1);
    }
  }
  return normalize(out);
}

std::string emit_solution(const VertexSet& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i] + 1;
  out << '\n';
  return out.str();
}

std::string result_json(const IfvsResult& result, int indent) {
  Json j;
  j["status"] = result.solution ? "yes" : "no";
  j["solution"] = result.solution ? one_indexed(*result.solution) : Json::array();
  j["size"] = result.solution ? Json(result.solution->size()) : Json(nullptr);
  const SolveStats& s = result.stats;
  j["stats"] = {{"fvs_size", s.fvs_size},
                {"guesses_tried", s.guesses_tried},
                {"branch_nodes", s.branch_nodes},
                {"max_mu", s.max_mu},
                {"mu0", s.mu0},
                {"leaves", s.leaves},
                {"fib_bound", s.fib_bound}};
  return j.dump(indent);
}

void write_trace_jsonl(std::ostream& out, const IfvsResult& result) {
  for (std::size_t g = 0; g < result.guesses.size(); ++g) {
    const GuessTrace& gt = result.guesses[g];
    Json head;
    head["type"] = "guess";
    head["guess"] = g;
    head["z_prime"] = one_indexed(gt.guess);
    head["w"] = one_indexed(gt.w);
    head["r"] = one_indexed(gt.r);
    head["budget"] = gt.budget;
    head["mu0"] = gt.stats.mu0;
    head["nodes"] = gt.stats.nodes;
    out << head.dump() << '\n';
    for (std::size_t i = 0; i < gt.trace.nodes.size(); ++i) {
      const TraceNode& n = gt.trace.nodes[i];
      Json node;
      node["type"] = "node";
      node["guess"] = g;
      node["id"] = i;
      node["kind"] = to_string(n.kind);
      node["label"] = to_string(n.label);
      node["parent"] = n.parent;
      node["depth"] = n.depth;
      node["mu"] = n.mu;
      if (n.pivot) {
        node["pivot"] = n.pivot->vertex + 1;
        node["case"] = to_string(n.pivot->pivot_case);
      }
      if (n.kind == NodeKind::kRejected) node["rejecting_rule"] = n.rejecting_rule;
      out << node.dump() << '\n';
      for (const FiringRecord& f : n.reductions) {
        Json firing;
        firing["type"] = "firing";
        firing["guess"] = g;
        firing["node"] = i;
        firing["rule"] = f.rule;
        firing["pivot"] = f.pivot + 1;
        firing["mu_before"] = f.mu_before;
        firing["mu_after"] = f.mu_after;
        out << firing.dump() << '\n';
      }
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace ifvs
