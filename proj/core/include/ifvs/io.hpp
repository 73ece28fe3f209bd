#pragma once

#include <iosfwd>
#include <string>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "ifvs/graph.hpp"
#include "ifvs/instance.hpp"
#include "ifvs/pipeline.hpp"

namespace ifvs {

// Text formats use 1-indexed vertex ids; everything in memory is 0-indexed.
//
//   c <free text>           comment
//   p ifvs <n> <m>          header of a graph file
//   p disifvs <n> <m>       header of a disjoint instance
//   e <u> <v>               one edge occurrence (repeat for multiplicity)
//   W <v> / R <v> / k <int> disjoint instances only

struct GraphDocument {
  MultiGraph graph;
  /// Comment lines without the leading "c ".
  std::vector<std::string> comments;
};

/// Throws ParseError (with the 1-based line number) on malformed input,
/// out-of-range ids or an edge count that disagrees with the header.
GraphDocument parse_graph_document(std::string_view text);
MultiGraph parse_graph(std::string_view text);
DisInstance parse_dis_instance(std::string_view text);

using ParsedInput = std::variant<MultiGraph, DisInstance>;
/// Dispatches on the header.
ParsedInput parse_input(std::string_view text);

/// Value of a "c <key> <int>" comment, if present.
std::optional<int> comment_int(const std::vector<std::string>& comments, std::string_view key);

/// Vertices are renumbered densely in id order when g has dead ids.
std::string emit_graph(const MultiGraph& g, const std::vector<std::string>& comments = {});
std::string emit_dis_instance(const DisInstance& inst);

/// Whitespace separated 1-indexed ids; "c" lines are comments and a
/// "yes <size>" status line, as printed by the solver, is skipped.
VertexSet parse_solution(std::string_view text);
std::string emit_solution(const VertexSet& s);

/// {status, solution, size, stats{...}} with a fixed key order. Solution ids
/// are 1-indexed.
std::string result_json(const IfvsResult& result, int indent = -1);

/// One JSON object per line: a "guess" record per disjoint subproblem, then a
/// "node" record per search-tree node and a "firing" record per reduction.
void write_trace_jsonl(std::ostream& out, const IfvsResult& result);

std::string read_file(const std::string& path);

}  // namespace ifvs
