#pragma once

#include <cstdint>
#include <vector>

#include "tricount/graph.hpp"
#include "tricount/sampling.hpp"

namespace tricount {

struct EstimatorConfig {
  double epsilon = 0.1;            // target relative error, in (0,1)
  double failure_exponent = 1.0;   // the d in the failure bound n^-d
  std::uint32_t repetitions = 5;   // median-boost runs; odd, >= 1
  std::uint64_t tau = 32;          // raw count that ends the doubling loop
  std::uint32_t start_colors = 0;  // 0 = derive from m (see below)
};

// Smallest power of two whose square is >= m; the default starting color
// count for the doubling loop.
std::uint32_t default_start_colors(std::uint64_t m);

struct PBound {
  double p = 1.0;                // sufficient sampling rate, clamped to (0,1]
  std::uint32_t colors = 1;      // implied N = max(1, floor(1/p))
  bool sampling_useful = true;   // false when t == 0: nothing to sample
};

// Second-moment sufficient rate: p >= max(Delta*log(n)/t, log(n)/sqrt(t)),
// natural log. t == 0 yields the "sampling unnecessary" signal instead of
// a bound.
PBound sufficient_p_second_moment(std::uint64_t t,
                                  std::uint64_t max_edge_triangles,
                                  std::uint64_t n);

// Chernoff-based sufficient rate:
// p^2 >= 4*(d+3)*t_max*log(n) / (epsilon^2 * t), natural log.
PBound sufficient_p_chernoff(std::uint64_t t,
                             std::uint64_t max_vertex_triangles,
                             std::uint64_t n, double epsilon, double d);

// Middle element of the sorted list; lower-middle for even length.
// Throws std::invalid_argument on an empty list.
double median_boost(std::vector<double> values);

struct ProbeRecord {
  std::uint32_t colors = 0;
  std::uint64_t raw = 0;
  std::uint64_t seed = 0;
};

struct AdaptiveResult {
  std::uint32_t colors = 1;       // color count the doubling loop settled on
  double estimate = 0.0;
  std::vector<ProbeRecord> trace; // every (N, raw) probe, in order
  std::vector<Estimate> finals;   // the median-boosted runs at chosen N
};

// Doubling procedure: start at start_colors, halve the color count (double
// the rate) until a probe sees at least tau raw triangles or N reaches 1,
// then take the median of `repetitions` fresh runs at the chosen N. Probe
// and repetition seeds derive from `seed` by consecutive substream
// indices, so the whole trace is reproducible. N == 1 returns the exact
// count with a single-entry trace.
AdaptiveResult adaptive_estimate(const Graph& g, const EstimatorConfig& cfg,
                                 std::uint64_t seed);

}  // namespace tricount
