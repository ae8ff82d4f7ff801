#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tricount {

// Undirected edge in canonical form u < v.
struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected simple graph: no self-loops, no duplicate edges,
// each edge stored once with u < v, CSR adjacency with strictly increasing
// neighbor lists. Construction is single-threaded; afterwards the graph is
// safe for concurrent reads from any number of workers.
class Graph {
 public:
  Graph() = default;

  // Normalizes an arbitrary pair list: self-loops dropped, duplicates
  // (including reversed ones) collapsed, ids remapped densely to 0..n-1 in
  // ascending order of the raw ids. The raw-id table is retained.
  static Graph from_pairs(
      const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs);

  // Fast path for callers that already hold canonical edges: u < v < n,
  // lexicographically sorted, no duplicates. Validated with one O(m) scan.
  static Graph from_canonical_edges(std::uint32_t n, std::vector<Edge> edges);

  std::uint32_t num_vertices() const { return n_; }
  std::uint64_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  // Strictly increasing neighbor list. Throws std::out_of_range if v >= n.
  std::span<const std::uint32_t> neighbors(std::uint32_t v) const;

  std::uint32_t degree(std::uint32_t v) const;
  std::uint32_t max_degree() const { return max_degree_; }
  bool has_edge(std::uint32_t u, std::uint32_t v) const;

  // Raw input ids, indexed by dense id; empty when the graph was built
  // with dense ids already (generators, canonical-edge construction).
  const std::vector<std::uint64_t>& original_ids() const {
    return original_ids_;
  }

  // Same vertex count and same edge set; the raw-id table is not part of
  // graph identity.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency();

  std::uint32_t n_ = 0;
  std::uint32_t max_degree_ = 0;
  std::vector<Edge> edges_;               // canonical, sorted
  std::vector<std::uint64_t> offsets_;    // n+1
  std::vector<std::uint32_t> adjacency_;  // 2m entries
  std::vector<std::uint64_t> original_ids_;
};

}  // namespace tricount
