#pragma once

#include <cstdint>

#include "tricount/graph.hpp"
#include "tricount/rational.hpp"

namespace tricount {

// k vertex-disjoint triangles: 3k vertices, 3k edges, every edge in
// exactly one triangle (Delta = 1, t_max = 1).
Graph make_disjoint_triangles(std::uint32_t k);

// Erdos-Renyi G(n, p) by geometric skipping over the pair index space;
// deterministic in (n, p, seed). p = 0 and p = 1 are exact special cases.
Graph make_gnp(std::uint32_t n, Rational p, std::uint64_t seed);

Graph make_complete(std::uint32_t n);
Graph make_complete_bipartite(std::uint32_t left, std::uint32_t right);
Graph make_star(std::uint32_t leaves);
Graph make_petersen();

}  // namespace tricount
