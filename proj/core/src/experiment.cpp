#include "beamkit/workbench/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "beamkit/parse_error.hpp"
#include "text_util.hpp"

namespace beamkit {

namespace {

constexpr std::string_view kHeader =
    "instance,algorithm,width,solved,cost,length,expansions,generations,duplicates_rejected,"
    "incumbent_pruned,levels,wall_time,termination";

Termination parse_termination(std::string_view text) {
  for (auto t : {Termination::SolutionFound, Termination::Exhausted, Termination::ResourceLimit}) {
    if (to_string(t) == text) return t;
  }
  throw std::invalid_argument("unknown termination '" + std::string(text) + "'");
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
}

std::uint64_t unsigned_field(std::string_view field, int line, const char* name) {
  const auto value = text::to_integer(field);
  if (!value || *value < 0) throw ParseError(line, fmt::format("bad {} '{}'", name, field));
  return static_cast<std::uint64_t>(*value);
}

double real_field(std::string_view field, int line, const char* name) {
  const auto value = text::to_real(field);
  if (!value) throw ParseError(line, fmt::format("bad {} '{}'", name, field));
  return *value;
}

}  // namespace

ResultRow make_row(const std::string& instance, const RunRequest& request, const RunSummary& summary) {
  ResultRow row;
  row.instance = instance;
  row.algorithm = request.algorithm;
  row.width = request.width;
  row.solved = summary.solved();
  row.cost = summary.solved() ? summary.cost : kInfinity;
  row.length = summary.solved() ? summary.length : 0;
  row.stats = summary.stats;
  row.wall_time = summary.wall_time;
  row.termination = summary.termination;
  return row;
}

void write_results_csv(std::ostream& out, std::span<const ResultRow> rows) {
  out << kHeader << '\n';
  for (const auto& r : rows) {
    out << fmt::format("{},{},{},{},", r.instance, to_string(r.algorithm), r.width, r.solved ? 1 : 0);
    if (r.solved) {
      out << fmt::format("{},{},", r.cost, r.length);
    } else {
      out << ",,";
    }
    out << fmt::format("{},{},{},{},{},{},{}\n", r.stats.expansions, r.stats.generations,
                       r.stats.duplicates_rejected, r.stats.incumbent_pruned, r.stats.levels, r.wall_time,
                       to_string(r.termination));
  }
}

std::string results_csv(std::span<const ResultRow> rows) {
  std::ostringstream out;
  write_results_csv(out, rows);
  return out.str();
}

std::vector<ResultRow> parse_results_csv(std::string_view text) {
  std::vector<ResultRow> rows;
  const auto lines = text::content_lines(text);
  if (lines.empty() || lines.front().content != kHeader) {
    throw ParseError(lines.empty() ? 1 : lines.front().number, "missing results header");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int n = lines[i].number;
    const auto f = split_fields(lines[i].content);
    if (f.size() != 13) throw ParseError(n, fmt::format("expected 13 fields, got {}", f.size()));
    ResultRow r;
    r.instance = std::string(f[0]);
    try {
      r.algorithm = parse_algorithm(f[1]);
      r.termination = parse_termination(f[12]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(n, e.what());
    }
    r.width = static_cast<std::uint32_t>(unsigned_field(f[2], n, "width"));
    if (f[3] != "0" && f[3] != "1") throw ParseError(n, "solved must be 0 or 1");
    r.solved = f[3] == "1";
    if (r.solved) {
      r.cost = real_field(f[4], n, "cost");
      r.length = unsigned_field(f[5], n, "length");
    } else if (!f[4].empty() || !f[5].empty()) {
      throw ParseError(n, "unsolved rows carry no cost or length");
    }
    r.stats.expansions = unsigned_field(f[6], n, "expansions");
    r.stats.generations = unsigned_field(f[7], n, "generations");
    r.stats.duplicates_rejected = unsigned_field(f[8], n, "duplicates_rejected");
    r.stats.incumbent_pruned = unsigned_field(f[9], n, "incumbent_pruned");
    r.stats.levels = unsigned_field(f[10], n, "levels");
    r.wall_time = real_field(f[11], n, "wall_time");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::uint32_t> parse_widths(std::string_view text) {
  auto number = [&](std::string_view token) {
    const auto value = text::to_integer(text::trim(token));
    if (!value || *value < 1 || *value > 0xFFFFFFFFLL) {
      throw std::invalid_argument("bad width '" + std::string(token) + "'");
    }
    return static_cast<std::uint32_t>(*value);
  };
  std::vector<std::uint32_t> widths;
  if (text::trim(text).empty()) return widths;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    const auto lo = number(text.substr(0, colon));
    const auto hi = number(text.substr(colon + 1));
    if (hi < lo) throw std::invalid_argument("width range is empty");
    for (std::uint32_t w = lo;; ++w) {
      widths.push_back(w);
      if (w == hi) break;
    }
    return widths;
  }
  for (auto token : split_fields(text)) widths.push_back(number(token));
  return widths;
}

std::vector<ResultRow> run_experiment(std::span<const Problem> problems, const ExperimentConfig& config) {
  for (std::size_t i = 0; i < config.widths.size(); ++i) {
    if (config.widths[i] == 0) throw std::invalid_argument("beam width must be at least 1");
    if (i > 0 && config.widths[i] <= config.widths[i - 1]) {
      throw std::invalid_argument("widths must be strictly increasing");
    }
  }

  const std::size_t per_problem = config.widths.size();
  const std::size_t total = problems.size() * per_problem;
  if (total == 0) return {};
  std::vector<ResultRow> rows(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    while (true) {
      const std::size_t task = next.fetch_add(1);
      if (task >= total) return;
      const auto& problem = problems[task / per_problem];
      RunRequest request;
      request.algorithm = config.algorithm;
      request.width = config.widths[task % per_problem];
      request.pruning = config.pruning;
      request.dedup = config.dedup;
      request.node_limit = config.node_limit;
      request.time_limit = config.time_limit;
      try {
        rows[task] = make_row(problem.id(), request, problem.run(request));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(total);
      }
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(total)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

double ill_behaved_fraction(std::span<const std::uint32_t> widths, std::span<const Cost> costs) {
  if (widths.size() != costs.size()) throw std::invalid_argument("one cost per width is required");
  if (widths.size() < 2) throw std::invalid_argument("ill-behavior needs at least two widths");
  for (std::size_t i = 1; i < widths.size(); ++i) {
    if (widths[i] != widths[i - 1] + 1) throw std::invalid_argument("widths must be contiguous");
  }
  std::size_t rises = 0;
  for (std::size_t i = 0; i + 1 < costs.size(); ++i) {
    if (costs[i + 1] > costs[i]) ++rises;
  }
  return static_cast<double>(rises) / static_cast<double>(widths.size() - 1);
}

namespace {

// Rows of one algorithm grouped by instance, first-appearance order, each
// group sorted by width.
std::vector<std::vector<ResultRow>> group_by_instance(std::span<const ResultRow> rows, Algorithm algorithm) {
  std::vector<std::vector<ResultRow>> groups;
  std::map<std::string, std::size_t> index;
  for (const auto& r : rows) {
    if (r.algorithm != algorithm) continue;
    auto [it, inserted] = index.try_emplace(r.instance, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(r);
  }
  for (auto& g : groups) {
    std::sort(g.begin(), g.end(), [](const ResultRow& a, const ResultRow& b) { return a.width < b.width; });
  }
  return groups;
}

}  // namespace

std::vector<InstanceIllBehavior> ill_behaved_by_instance(std::span<const ResultRow> rows, Algorithm algorithm) {
  std::vector<InstanceIllBehavior> out;
  for (const auto& group : group_by_instance(rows, algorithm)) {
    std::vector<std::uint32_t> widths;
    std::vector<Cost> costs;
    for (const auto& r : group) {
      widths.push_back(r.width);
      costs.push_back(r.solved ? r.cost : kInfinity);
    }
    InstanceIllBehavior entry;
    entry.instance = group.front().instance;
    entry.lo = widths.front();
    entry.hi = widths.back();
    entry.fraction = ill_behaved_fraction(widths, costs);
    out.push_back(std::move(entry));
  }
  return out;
}

MonotonicReport monotonic_violations(std::span<const ResultRow> rows) {
  MonotonicReport report;
  report.rows.assign(rows.begin(), rows.end());
  std::sort(report.rows.begin(), report.rows.end(),
            [](const ResultRow& a, const ResultRow& b) { return a.width < b.width; });
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    if (r.termination == Termination::ResourceLimit) report.limited.push_back(r.width);
    if (i + 1 == report.rows.size()) break;
    const auto& next = report.rows[i + 1];
    const Cost cost = r.solved ? r.cost : kInfinity;
    const Cost next_cost = next.solved ? next.cost : kInfinity;
    if (next_cost > cost) report.violations.push_back({r.width, next.width, cost, next_cost});
  }
  return report;
}

MonotonicReport check_monotonic(const Problem& problem, const RunRequest& base,
                                std::span<const std::uint32_t> widths) {
  if (widths.empty()) throw std::invalid_argument("no widths given");
  for (std::size_t i = 1; i < widths.size(); ++i) {
    if (widths[i] <= widths[i - 1]) throw std::invalid_argument("widths must be strictly increasing");
  }
  std::vector<ResultRow> rows;
  rows.reserve(widths.size());
  for (auto w : widths) {
    RunRequest request = base;
    request.width = w;
    rows.push_back(make_row(problem.id(), request, problem.run(request)));
  }
  return monotonic_violations(rows);
}

PlotData emit_plot_data(std::span<const ResultRow> rows, double mean_action_cost) {
  if (rows.empty()) throw std::invalid_argument("no result rows");
  PlotData data;
  data.mean_action_cost = mean_action_cost;

  std::map<Algorithm, std::map<std::string, bool>> instances;
  std::map<std::pair<Algorithm, std::uint32_t>, std::vector<const ResultRow*>> groups;
  for (const auto& r : rows) {
    instances[r.algorithm][r.instance] = true;
    groups[{r.algorithm, r.width}].push_back(&r);
    if (r.solved) {
      data.scatter.push_back({r.algorithm, r.width, r.instance, r.length, r.cost,
                              static_cast<double>(r.length) * mean_action_cost});
    }
  }

  std::map<Algorithm, bool> any_eligible;
  for (const auto& [key, group] : groups) {
    const auto algorithm = key.first;
    std::map<std::string, bool> seen;
    double time = 0;
    double cost = 0;
    bool all_solved = true;
    for (const auto* r : group) {
      all_solved = all_solved && r->solved;
      seen[r->instance] = true;
      time += r->wall_time;
      cost += r->cost;
    }
    any_eligible.try_emplace(algorithm, false);
    if (!all_solved || seen.size() != instances[algorithm].size()) continue;
    any_eligible[algorithm] = true;
    const double n = static_cast<double>(group.size());
    data.averages.push_back({algorithm, key.second, time / n, cost / n, seen.size()});
  }
  for (const auto& [algorithm, eligible] : any_eligible) {
    if (!eligible) {
      data.warnings.push_back(
          fmt::format("{}: no width solved every instance; average series is empty", to_string(algorithm)));
    }
  }
  return data;
}

void write_averages_csv(std::ostream& out, const PlotData& data) {
  out << "algorithm,width,instances,mean_wall_time,mean_cost\n";
  for (const auto& p : data.averages) {
    out << fmt::format("{},{},{},{},{}\n", to_string(p.algorithm), p.width, p.instances, p.mean_wall_time,
                       p.mean_cost);
  }
}

void write_scatter_csv(std::ostream& out, const PlotData& data) {
  out << "algorithm,width,instance,length,cost,reference_cost\n";
  for (const auto& p : data.scatter) {
    out << fmt::format("{},{},{},{},{},{}\n", to_string(p.algorithm), p.width, p.instance, p.length, p.cost,
                       p.reference_cost);
  }
}

}  // namespace beamkit
