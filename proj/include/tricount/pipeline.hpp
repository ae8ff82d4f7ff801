#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "tricount/exact.hpp"
#include "tricount/graph.hpp"
#include "tricount/sampling.hpp"

namespace tricount {

// Map output: a monochromatic edge keyed by its (shared) endpoint color.
struct KeyedEdge {
  std::uint32_t color = 0;
  Edge edge;

  friend constexpr bool operator==(const KeyedEdge&,
                                   const KeyedEdge&) = default;
};

struct ShuffleMetrics {
  std::uint64_t emitted_total = 0;             // |E'|
  std::vector<std::uint64_t> per_color;        // reducer loads, size N
  std::uint64_t max_reducer_load = 0;
  std::vector<std::uint64_t> reducer_triangles;// local counts, size N
  int rounds = 2;  // map+reduce, then the driver's sum-and-scale fold
};

// Mappers own contiguous edge ranges and emit exactly the monochromatic
// edges; concatenated in mapper order the output is independent of
// mapper_count.
std::vector<KeyedEdge> map_phase(const Graph& g, const Coloring& c,
                                 int mapper_count);

// Group by color. Lists come out in canonical edge order (map emission
// order is canonical and grouping is stable).
std::map<std::uint32_t, std::vector<Edge>> shuffle(
    std::span<const KeyedEdge> keyed);

// Exact triangle count of the subgraph induced by one reducer's edge list.
// Pre: all edges share the color key.
CountResult reduce_phase(std::uint32_t color, std::span<const Edge> edges);

struct PipelineResult {
  Estimate estimate;
  ShuffleMetrics metrics;
};

// Full simulated run: map, shuffle, per-color reduce, driver fold with the
// 1/p^2 scale. The estimate matches estimate_once(g, colors, seed) field
// for field; metrics record the shuffle sizes the run produced.
PipelineResult run_pipeline(const Graph& g, std::uint32_t colors,
                            std::uint64_t seed, int mapper_count = 1);

}  // namespace tricount
