#pragma once

#include <cstdint>
#include <vector>

#include "tricount/graph.hpp"
#include "tricount/rational.hpp"

namespace tricount {

// Vertex coloring f: V -> {0..num_colors-1} plus the seed that produced
// it. Same (n, num_colors, seed) always reproduces the same colors.
struct Coloring {
  std::vector<std::uint32_t> colors;
  std::uint32_t num_colors = 1;
  std::uint64_t seed = 0;
};

// Each vertex's color drawn independently and uniformly via its own
// counter-based substream, so the result is identical for any worker
// count. Throws std::invalid_argument if num_colors == 0.
Coloring random_coloring(std::uint32_t n, std::uint32_t num_colors,
                         std::uint64_t seed);

// The edges whose endpoints share a color, in canonical edge order.
// The filter may be partitioned across workers; output is order-preserving
// and deterministic either way.
std::vector<Edge> monochromatic_edges(const Graph& g, const Coloring& c);

// Same vertex set, exactly the monochromatic edges. A triangle of g never
// has exactly two edges here: two shared-color constraints force the third.
Graph monochromatic_subgraph(const Graph& g, const Coloring& c);

// One estimator outcome. For color sampling the estimate is the exact
// integer raw * colors^2 (scale_den == 1); for independent edge sampling
// it is raw * den^3 / num^3.
struct Estimate {
  std::uint64_t raw = 0;          // triangles in the sample
  std::uint32_t colors = 0;       // N for color sampling, 0 otherwise
  Rational keep_prob{1, 1};       // per-edge survival probability
  std::uint64_t scale_num = 1;    // estimate = raw * scale_num / scale_den
  std::uint64_t scale_den = 1;
  std::uint64_t seed = 0;
  std::uint64_t sampled_edges = 0;
  std::uint64_t work_ops = 0;     // intersection ops spent on the sample

  double value() const {
    return static_cast<double>(raw) *
           (static_cast<double>(scale_num) / static_cast<double>(scale_den));
  }
  friend constexpr bool operator==(const Estimate&, const Estimate&) = default;
};

// Count triangles among the monochromatic edges of an explicit coloring
// and scale by colors^2. Exact counting is used on the sample, so all
// estimation error comes from the coloring itself.
Estimate estimate_with_coloring(const Graph& g, const Coloring& c);

// Algorithm entry point: color with a fresh coloring from `seed`, keep
// monochromatic edges, count, scale. num_colors == 1 returns the exact
// count. Pure in (g, num_colors, seed).
Estimate estimate_once(const Graph& g, std::uint32_t num_colors,
                       std::uint64_t seed);

// Baseline for comparison: each edge kept independently with probability
// keep (exact rational), count scaled by 1/keep^3.
Estimate independent_edge_estimate(const Graph& g, Rational keep,
                                   std::uint64_t seed);

}  // namespace tricount
