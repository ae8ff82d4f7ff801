#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "tricount/graph.hpp"

namespace tricount {

struct CountResult {
  std::uint64_t triangles = 0;
  // Neighbor-list elements touched while merging adjacency lists; a
  // machine-independent proxy for counting work.
  std::uint64_t ops = 0;

  friend constexpr bool operator==(const CountResult&,
                                   const CountResult&) = default;
};

// Node-iterator counting in its forward variant: each edge is oriented
// from lower to higher rank, where rank orders vertices by (degree, id),
// and out-neighbor lists are merge-intersected. Each triangle is found
// exactly once. OpenMP-parallel over vertices; the result, including the
// op counter, is identical for any worker count.
CountResult count_triangles(const Graph& g);

// Serial reference for the kernel above; same algorithm, no threading.
// Kept for testing and for the kernel benchmark.
CountResult count_triangles_serial(const Graph& g);

struct Triangle {
  std::uint32_t a = 0, b = 0, c = 0;  // a < b < c

  friend constexpr bool operator==(const Triangle&, const Triangle&) = default;
  friend constexpr auto operator<=>(const Triangle&, const Triangle&) = default;
};

// Every triangle exactly once, lexicographically sorted canonical triples.
std::vector<Triangle> enumerate_triangles(const Graph& g);

struct TriangleStats {
  std::uint64_t triangles = 0;           // t
  std::vector<std::uint64_t> per_edge;   // delta_e, aligned with g.edges()
  std::uint64_t max_per_edge = 0;        // Delta
  std::vector<std::uint64_t> per_vertex; // triangles containing each vertex
  std::uint64_t max_per_vertex = 0;      // t_max
  std::uint64_t sum_delta_sq = 0;        // sum of delta_e^2
  std::uint64_t delta_bound = 0;         // 3 * Delta * t
};

// All statistics from one traversal: every found triangle bumps three edge
// counters and three vertex counters. Parallel counters are accumulated
// per worker and merged, so results do not depend on the worker count.
TriangleStats triangle_stats(const Graph& g);
TriangleStats triangle_stats_serial(const Graph& g);

inline constexpr std::uint32_t kBruteForceLimit = 500;

// Definitional O(n^3) oracle: scans all vertex triples against an
// adjacency matrix. Refuses graphs above `limit` vertices.
std::uint64_t brute_force_count(const Graph& g,
                                std::uint32_t limit = kBruteForceLimit);

}  // namespace tricount
