#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beamkit/workbench/problem.hpp"

namespace beamkit {

/// One (instance, algorithm, width) outcome. `cost` is infinite and
/// `length` zero unless solved.
struct ResultRow {
  std::string instance;
  Algorithm algorithm = Algorithm::Monobeam;
  std::uint32_t width = 1;
  bool solved = false;
  Cost cost = kInfinity;
  std::size_t length = 0;
  SearchStats stats;
  double wall_time = 0;
  Termination termination = Termination::Exhausted;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

ResultRow make_row(const std::string& instance, const RunRequest& request, const RunSummary& summary);

/// Header plus one line per row. Unsolved rows leave cost and length empty.
void write_results_csv(std::ostream& out, std::span<const ResultRow> rows);
std::string results_csv(std::span<const ResultRow> rows);
/// Inverse of write_results_csv. Throws ParseError.
std::vector<ResultRow> parse_results_csv(std::string_view text);

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::Monobeam;
  std::vector<std::uint32_t> widths;
  bool pruning = true;
  std::optional<Dedup> dedup;
  std::optional<std::uint64_t> node_limit;
  std::optional<double> time_limit;
  unsigned jobs = 1;
};

/// Parses "LO:HI" (inclusive) or a comma-separated list such as "1,5,10".
/// Blank text gives no widths.
std::vector<std::uint32_t> parse_widths(std::string_view text);

/// Runs every (instance, width) pair. Rows come back ordered by instance
/// position then width whatever `jobs` is, and all fields except wall_time
/// are identical across runs. Widths must be positive and strictly increasing.
std::vector<ResultRow> run_experiment(std::span<const Problem> problems, const ExperimentConfig& config);

/// Fraction of widths k in [lo, hi) with cost(k+1) > cost(k); an unsolved
/// width counts as infinite cost. Needs at least two contiguous widths.
double ill_behaved_fraction(std::span<const std::uint32_t> widths, std::span<const Cost> costs);

struct InstanceIllBehavior {
  std::string instance;
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  double fraction = 0;
};

/// Per-instance fraction over the rows of one algorithm, in row order.
std::vector<InstanceIllBehavior> ill_behaved_by_instance(std::span<const ResultRow> rows, Algorithm algorithm);

struct MonotonicViolation {
  std::uint32_t width = 0;
  std::uint32_t next_width = 0;
  Cost cost = kInfinity;
  Cost next_cost = kInfinity;
};

struct MonotonicReport {
  std::vector<MonotonicViolation> violations;
  /// Widths whose run stopped on a resource limit; their cost counts as infinite.
  std::vector<std::uint32_t> limited;
  std::vector<ResultRow> rows;
  bool monotone() const { return violations.empty(); }
};

/// Runs `base` at each width and flags adjacent pairs whose cost rises.
MonotonicReport check_monotonic(const Problem& problem, const RunRequest& base,
                                std::span<const std::uint32_t> widths);
/// The same check over rows already collected for one instance.
MonotonicReport monotonic_violations(std::span<const ResultRow> rows);

struct AveragePoint {
  Algorithm algorithm = Algorithm::Monobeam;
  std::uint32_t width = 0;
  double mean_wall_time = 0;
  double mean_cost = 0;
  std::size_t instances = 0;
};

struct ScatterPoint {
  Algorithm algorithm = Algorithm::Monobeam;
  std::uint32_t width = 0;
  std::string instance;
  std::size_t length = 0;
  Cost cost = 0;
  double reference_cost = 0;
};

struct PlotData {
  std::vector<AveragePoint> averages;
  std::vector<ScatterPoint> scatter;
  double mean_action_cost = 1;
  std::vector<std::string> warnings;
};

/// Time/cost averages use only (algorithm, width) groups where every
/// instance seen for that algorithm is solved. The scatter keeps each solved
/// row with `length * mean_action_cost` as its reference. Throws on no rows.
PlotData emit_plot_data(std::span<const ResultRow> rows, double mean_action_cost);
void write_averages_csv(std::ostream& out, const PlotData& data);
void write_scatter_csv(std::ostream& out, const PlotData& data);

}  // namespace beamkit
