#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tricount/control.hpp"
#include "tricount/exact.hpp"
#include "tricount/graph.hpp"
#include "tricount/rational.hpp"
#include "tricount/sampling.hpp"

namespace tricount {

struct TrialSummary {
  std::size_t trials = 0;
  double mean = 0.0;
  double stddev = 0.0;       // sample standard deviation
  double median = 0.0;
  double mean_raw = 0.0;
  std::uint64_t zero_raw_trials = 0;
  std::uint64_t total_work_ops = 0;
  // Populated only when the exact count is known:
  std::optional<double> mean_rel_error;
  std::optional<double> median_rel_error;
  std::optional<double> within_eps_fraction;
};

struct ExperimentReport {
  std::string graph_id;
  std::optional<std::uint64_t> exact;
  std::uint64_t exact_ops = 0;
  double exact_seconds = 0.0;   // wall time; reported on stderr only
  double trials_seconds = 0.0;
  double epsilon = 0.1;
  std::vector<Estimate> estimates;  // trial order
  TrialSummary summary;
};

// `trials` color-sampling runs at the given N; trial seeds derive from
// `seed` by trial index, trials may execute concurrently, aggregation is
// in trial order so reports are reproducible byte for byte.
ExperimentReport run_estimate_trials(const Graph& g, std::string graph_id,
                                     std::uint32_t colors, std::size_t trials,
                                     std::uint64_t seed, bool with_exact,
                                     double epsilon);

struct ReportOptions {
  bool exact_only = false;
  std::optional<std::uint32_t> colors;  // N for estimate mode
  std::size_t trials = 1;
  double epsilon = 0.1;
  bool with_exact = true;
};

// Mode dispatcher behind the CLI: exact-only or repeated estimation.
// Conflicting options raise std::invalid_argument.
ExperimentReport run_report(const Graph& g, std::string graph_id,
                            const ReportOptions& opts, std::uint64_t seed);

struct SamplerComparison {
  Rational keep{1, 1};
  ExperimentReport colorful;
  ExperimentReport independent;
};

// Both samplers at the same per-edge keep probability 1/N: color sampling
// with N colors against independent edge sampling at p = 1/N. keep must
// be a unit fraction.
SamplerComparison compare_samplers(const Graph& g, std::string graph_id,
                                   Rational keep, std::size_t trials,
                                   std::uint64_t seed, double epsilon = 0.1);

// Table row for a dataset: name, n, m, t, Delta, t_max, sum delta^2,
// 3*Delta*t.
std::string format_stats_row(const std::string& name, const Graph& g,
                             const TriangleStats& stats);
std::string format_stats_header();
std::string format_stats_kv(const std::string& name, const Graph& g,
                            const TriangleStats& stats);

std::string format_report(const ExperimentReport& report, bool kv);
std::string format_comparison(const SamplerComparison& cmp, bool kv);

// Graph arguments accepted by the CLI: a path, "-" for stdin, or a
// generator spec "disjoint:<k>" / "gnp:<n>:<p>:<seed>".
Graph load_graph_argument(const std::string& arg);

}  // namespace tricount
