#include "tricount/edge_list_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tricount {

namespace {

[[noreturn]] void parse_fail(std::uint64_t line_no, const std::string& what) {
  throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                           ": " + what);
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

std::uint64_t parse_id(std::string_view token, std::uint64_t line_no) {
  std::uint64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    parse_fail(line_no, "expected a nonnegative integer, got '" +
                            std::string(token) + "'");
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in, const ParseOptions& opts) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::vector<std::uint64_t> lines;  // per-pair line numbers, strict mode
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv(line);
    // Tolerate CRLF input.
    if (!sv.empty() && sv.back() == '\r') sv.remove_suffix(1);
    if (blank(sv)) continue;
    const auto first_char = sv.find_first_not_of(" \t");
    if (sv[first_char] == opts.comment_prefix) continue;

    std::string_view tokens[3];
    int count = 0;
    std::size_t pos = first_char;
    while (pos < sv.size()) {
      const auto end = sv.find_first_of(" \t", pos);
      const auto tok =
          sv.substr(pos, end == std::string_view::npos ? end : end - pos);
      if (count < 3) tokens[count] = tok;
      ++count;
      if (end == std::string_view::npos) break;
      pos = sv.find_first_not_of(" \t", end);
      if (pos == std::string_view::npos) break;
    }
    if (count != 2)
      parse_fail(line_no, "expected two fields, got " + std::to_string(count));

    const std::uint64_t a = parse_id(tokens[0], line_no);
    const std::uint64_t b = parse_id(tokens[1], line_no);
    if (!opts.treat_as_undirected) {
      if (a == b) parse_fail(line_no, "self-loop in strict mode");
      lines.push_back(line_no);
    }
    pairs.emplace_back(a, b);
  }

  if (!opts.treat_as_undirected) {
    // Strict mode: every undirected edge must appear exactly once.
    std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>,
                          std::uint64_t>> keyed(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [a, b] = pairs[i];
      if (a > b) std::swap(a, b);
      keyed[i] = {{a, b}, lines[i]};
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 1; i < keyed.size(); ++i)
      if (keyed[i].first == keyed[i - 1].first)
        parse_fail(keyed[i].second, "duplicate edge in strict mode");
  }

  return Graph::from_pairs(pairs);
}

Graph load_edge_list(const std::string& path, const ParseOptions& opts) {
  if (path == "-") return parse_edge_list(std::cin, opts);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_edge_list(in, opts);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string graph_kv_report(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.num_vertices() << '\n'
     << "m=" << g.num_edges() << '\n'
     << "max_degree=" << g.max_degree() << '\n';
  return os.str();
}

}  // namespace tricount
