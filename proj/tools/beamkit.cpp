// beamkit command-line front end: solve, sweep, analyze, check, gen, plot-data.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "beamkit/domains/blocks.hpp"
#include "beamkit/domains/generators.hpp"
#include "beamkit/domains/pancake.hpp"
#include "beamkit/domains/tiles.hpp"
#include "beamkit/trace.hpp"
#include "beamkit/workbench/experiment.hpp"
#include "beamkit/workbench/problem.hpp"

namespace {

using namespace beamkit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnsolved = 2;
constexpr int kExitLimit = 3;
constexpr int kExitViolation = 4;

struct DomainArgs {
  std::string domain = "tiles";
  std::string cost_model = "unit";
  std::string blocks_model = "direct";
  std::string instance;
  int index = 0;

  DomainSpec spec() const {
    DomainSpec s;
    s.kind = parse_domain_kind(domain);
    s.cost_model = cost_model;
    s.blocks_model = parse_blocks_model(blocks_model);
    return s;
  }

  std::vector<Problem> problems() const {
    auto all = load_problems_from_file(spec(), instance);
    if (index == 0) return all;
    if (index < 0 || index > static_cast<int>(all.size())) {
      throw std::invalid_argument(fmt::format("--index {} out of range 1..{}", index, all.size()));
    }
    return {all[index - 1]};
  }
};

struct RunArgs {
  std::string algorithm = "monobeam";
  bool no_pruning = false;
  std::string dedup;
  std::uint64_t node_limit = 0;
  double time_limit = 0;

  RunRequest request() const {
    RunRequest r;
    r.algorithm = parse_algorithm(algorithm);
    r.pruning = !no_pruning;
    if (!dedup.empty()) r.dedup = parse_dedup(dedup);
    if (node_limit > 0) r.node_limit = node_limit;
    if (time_limit > 0) r.time_limit = time_limit;
    return r;
  }
};

void add_domain_flags(CLI::App* cmd, DomainArgs& args, bool instance_required = true) {
  cmd->add_option("--domain", args.domain, "tiles|pancake|blocks|graph")->capture_default_str();
  cmd->add_option("--cost-model", args.cost_model, "unit|heavy|sqrt|inverse|reverse")->capture_default_str();
  cmd->add_option("--blocks-model", args.blocks_model, "direct|deep")->capture_default_str();
  auto* inst = cmd->add_option("--instance", args.instance, "instance file")->check(CLI::ExistingFile);
  if (instance_required) inst->required();
  cmd->add_option("--index", args.index, "1-based instance to use (default: all)");
}

void add_run_flags(CLI::App* cmd, RunArgs& args) {
  cmd->add_option("--algorithm", args.algorithm, "beam|monobeam|bead|monobead")->capture_default_str();
  cmd->add_flag("--no-pruning", args.no_pruning, "disable incumbent pruning (monobeam)");
  cmd->add_option("--dedup", args.dedup, "none|full|slot (default depends on algorithm)");
  cmd->add_option("--node-limit", args.node_limit, "stop after this many expansions");
  cmd->add_option("--time-limit", args.time_limit, "stop after this many seconds");
}

std::string format_cost(Cost c) { return c == kInfinity ? "inf" : fmt::format("{}", c); }

int solve(const DomainArgs& domain, const RunArgs& run, std::uint32_t width, const std::string& trace_path,
          bool print_path) {
  const auto problems = domain.problems();
  std::ofstream trace_file;
  std::unique_ptr<JsonlTraceWriter> writer;
  RunRequest request = run.request();
  request.width = width;
  if (!trace_path.empty()) {
    trace_file.open(trace_path);
    if (!trace_file) throw std::runtime_error("cannot write " + trace_path);
    writer = std::make_unique<JsonlTraceWriter>(trace_file);
    request.trace = writer.get();
  }

  bool unsolved = false;
  bool limited = false;
  for (const auto& problem : problems) {
    const auto summary = problem.run(request);
    unsolved = unsolved || !summary.solved();
    limited = limited || summary.termination == Termination::ResourceLimit;
    std::cout << fmt::format(
        "instance={} algorithm={} width={} termination={} cost={} length={} expansions={} generations={} "
        "duplicates_rejected={} incumbent_pruned={} levels={}{} wall_time={:.6f}\n",
        problem.id(), to_string(request.algorithm), width, to_string(summary.termination), format_cost(summary.cost),
        summary.length, summary.stats.expansions, summary.stats.generations, summary.stats.duplicates_rejected,
        summary.stats.incumbent_pruned, summary.stats.levels, summary.guarantee_void ? " guarantee_void=1" : "",
        summary.wall_time);
    if (print_path) {
      for (const auto& step : summary.path) std::cout << "  " << step << '\n';
    }
  }
  if (limited) return kExitLimit;
  return unsolved ? kExitUnsolved : kExitOk;
}

int sweep(const DomainArgs& domain, const RunArgs& run, const std::string& widths, unsigned jobs,
          const std::string& out_path) {
  const auto problems = domain.problems();
  const auto base = run.request();
  ExperimentConfig config;
  config.algorithm = base.algorithm;
  config.widths = parse_widths(widths);
  config.pruning = base.pruning;
  config.dedup = base.dedup;
  config.node_limit = base.node_limit;
  config.time_limit = base.time_limit;
  config.jobs = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
  const auto rows = run_experiment(problems, config);
  if (out_path.empty() || out_path == "-") {
    write_results_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    write_results_csv(out, rows);
  }
  const auto solved = std::count_if(rows.begin(), rows.end(), [](const ResultRow& r) { return r.solved; });
  std::cerr << fmt::format("{} runs, {} solved\n", rows.size(), solved);
  return kExitOk;
}

int analyze_ill_behaved(const std::string& in, const std::string& range) {
  const auto rows = parse_results_csv(read_text_file(in));
  const auto widths = parse_widths(range);
  if (widths.size() < 2) throw std::invalid_argument("--range needs LO < HI");
  std::vector<ResultRow> selected;
  std::vector<Algorithm> algorithms;
  for (const auto& r : rows) {
    if (r.width < widths.front() || r.width > widths.back()) continue;
    selected.push_back(r);
    if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end()) {
      algorithms.push_back(r.algorithm);
    }
  }
  if (selected.empty()) throw std::invalid_argument("no rows inside --range");
  std::cout << "algorithm,instance,lo,hi,ill_behaved_fraction\n";
  for (auto algorithm : algorithms) {
    const auto per_instance = ill_behaved_by_instance(selected, algorithm);
    double total = 0;
    for (const auto& entry : per_instance) {
      std::cout << fmt::format("{},{},{},{},{:.6f}\n", to_string(algorithm), entry.instance, entry.lo, entry.hi,
                               entry.fraction);
      total += entry.fraction;
    }
    std::cout << fmt::format("{},mean,{},{},{:.6f}\n", to_string(algorithm), widths.front(), widths.back(),
                             total / static_cast<double>(per_instance.size()));
  }
  return kExitOk;
}

int check_monotonic_cmd(const DomainArgs& domain, const RunArgs& run, const std::string& range) {
  const auto problems = domain.problems();
  const auto widths = parse_widths(range);
  const auto base = run.request();
  std::size_t violations = 0;
  for (const auto& problem : problems) {
    const auto report = check_monotonic(problem, base, widths);
    for (const auto& v : report.violations) {
      std::cout << fmt::format("instance={} violation width={} cost={} width={} cost={}\n", problem.id(), v.width,
                               format_cost(v.cost), v.next_width, format_cost(v.next_cost));
    }
    for (auto w : report.limited) {
      std::cout << fmt::format("instance={} resource-limit width={}\n", problem.id(), w);
    }
    violations += report.violations.size();
  }
  std::cout << fmt::format("{} instance(s), widths {}..{}, {} violation(s)\n", problems.size(), widths.front(),
                           widths.back(), violations);
  return violations == 0 ? kExitOk : kExitViolation;
}

int gen(const std::string& kind, int n, int count, std::uint64_t seed, bool all, const std::string& out_path) {
  std::string text;
  if (kind == "pancake") {
    const auto stacks = all ? all_pancakes(n) : gen_pancake(n, count, seed);
    text = serialize_pancakes(stacks);
  } else if (kind == "blocks") {
    if (all) throw std::invalid_argument("--all applies to pancake only");
    text = serialize_blocks(gen_blocks(n, count, seed));
  } else {
    if (all) throw std::invalid_argument("--all applies to pancake only");
    const auto boards = gen_tiles(n, count, seed);
    std::vector<TileInstance> instances;
    for (std::size_t i = 0; i < boards.size(); ++i) {
      instances.push_back({boards[i], n, 0, static_cast<int>(i + 1)});
    }
    text = serialize_tiles(instances);
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
  return kExitOk;
}

int plot_data(const std::string& in, const std::string& prefix, double reference) {
  const auto rows = parse_results_csv(read_text_file(in));
  const auto data = emit_plot_data(rows, reference);
  for (const auto& w : data.warnings) std::cerr << "warning: " << w << '\n';
  std::ofstream averages(prefix + "_averages.csv");
  std::ofstream scatter(prefix + "_scatter.csv");
  if (!averages || !scatter) throw std::runtime_error("cannot write under prefix " + prefix);
  write_averages_csv(averages, data);
  write_scatter_csv(scatter, data);
  std::cerr << fmt::format("{} average point(s), {} scatter point(s), reference slope {}\n", data.averages.size(),
                           data.scatter.size(), reference);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Beam search workbench"};
  app.require_subcommand(1);

  DomainArgs domain;
  RunArgs run;

  auto* solve_cmd = app.add_subcommand("solve", "run one algorithm at one width");
  add_domain_flags(solve_cmd, domain);
  add_run_flags(solve_cmd, run);
  std::uint32_t width = 1;
  std::string trace_path;
  bool print_path = false;
  solve_cmd->add_option("--width", width, "beam width")->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--trace", trace_path, "write per-slot events as JSON lines");
  solve_cmd->add_flag("--path", print_path, "print the solution path");

  auto* sweep_cmd = app.add_subcommand("sweep", "run every instance at every width and write CSV");
  add_domain_flags(sweep_cmd, domain);
  add_run_flags(sweep_cmd, run);
  std::string widths = "30,100,300,1000";
  std::string out_path;
  unsigned jobs = 0;
  sweep_cmd->add_option("--widths", widths, "LO:HI or a comma list")->capture_default_str();
  sweep_cmd->add_option("--out", out_path, "CSV path (default stdout)");
  sweep_cmd->add_option("--jobs", jobs, "worker threads (default: core count)");

  auto* analyze_cmd = app.add_subcommand("analyze", "summarize sweep results");
  analyze_cmd->require_subcommand(1);
  auto* ill_cmd = analyze_cmd->add_subcommand("ill-behaved", "fraction of widths where widening raises cost");
  std::string in_path;
  std::string range;
  ill_cmd->add_option("--in", in_path, "results CSV")->required()->check(CLI::ExistingFile);
  ill_cmd->add_option("--range", range, "LO:HI")->required();

  auto* check_cmd = app.add_subcommand("check", "property checks");
  check_cmd->require_subcommand(1);
  auto* mono_cmd = check_cmd->add_subcommand("monotonic", "flag widths where widening raises cost");
  add_domain_flags(mono_cmd, domain);
  add_run_flags(mono_cmd, run);
  mono_cmd->add_option("--widths", range, "LO:HI or a comma list")->required();

  auto* gen_cmd = app.add_subcommand("gen", "generate random instances");
  std::string gen_kind;
  int n = 0;
  int count = 1;
  std::uint64_t seed = 1;
  bool all = false;
  gen_cmd->add_option("kind", gen_kind, "pancake|blocks|tiles")
      ->required()
      ->check(CLI::IsMember({"pancake", "blocks", "tiles"}));
  gen_cmd->add_option("--n", n, "pancakes, blocks, or tile board side")->required();
  gen_cmd->add_option("--count", count, "instances")->capture_default_str();
  gen_cmd->add_option("--seed", seed, "generator seed")->capture_default_str();
  gen_cmd->add_flag("--all", all, "every permutation of n pancakes");
  gen_cmd->add_option("--out", out_path, "output path (default stdout)");

  auto* plot_cmd = app.add_subcommand("plot-data", "emit averaged and scatter series for plotting");
  std::string prefix;
  double reference = 0;
  int size = 0;
  plot_cmd->add_option("--in", in_path, "results CSV")->required()->check(CLI::ExistingFile);
  plot_cmd->add_option("--out", prefix, "output prefix")->required();
  auto* ref_opt = plot_cmd->add_option("--mean-action-cost", reference, "reference slope");
  plot_cmd->add_option("--domain", domain.domain, "derive the slope from this domain");
  plot_cmd->add_option("--cost-model", domain.cost_model, "cost model for the slope");
  plot_cmd->add_option("--size", size, "tiles (9|16) or pancakes, for the slope");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return solve(domain, run, width, trace_path, print_path);
    if (sweep_cmd->parsed()) return sweep(domain, run, widths, jobs, out_path);
    if (ill_cmd->parsed()) return analyze_ill_behaved(in_path, range);
    if (mono_cmd->parsed()) return check_monotonic_cmd(domain, run, range);
    if (gen_cmd->parsed()) return gen(gen_kind, n, count, seed, all, out_path);
    if (plot_cmd->parsed()) {
      if (ref_opt->count() == 0) {
        reference = size > 0 ? mean_action_cost(domain.spec(), size) : 1.0;
      }
      return plot_data(in_path, prefix, reference);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
