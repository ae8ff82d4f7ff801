#pragma once

#include <iosfwd>
#include <string>

#include "tricount/graph.hpp"

namespace tricount {

struct ParseOptions {
  char comment_prefix = '#';
  // Default: lines may repeat an edge in either orientation; self-loops and
  // duplicates are dropped silently. When false the parser is strict and
  // rejects self-loops and repeated edges with a line-numbered error.
  bool treat_as_undirected = true;
};

// Whitespace-separated integer pairs, one edge per line, comment lines
// allowed. Empty input is a valid empty graph. Malformed lines (wrong
// arity, non-integer token) raise std::runtime_error carrying the line
// number.
Graph parse_edge_list(std::istream& in, const ParseOptions& opts = {});

// Convenience wrapper; throws std::runtime_error if the file cannot be
// opened. A path of "-" reads standard input.
Graph load_edge_list(const std::string& path, const ParseOptions& opts = {});

// One "u v" line per canonical edge, dense ids. Re-parsing the output
// reproduces the graph.
void write_edge_list(std::ostream& out, const Graph& g);

// Flat key=value report: n, m, max_degree.
std::string graph_kv_report(const Graph& g);

}  // namespace tricount
