#include "beamkit/workbench/problem.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "beamkit/domains/graph.hpp"
#include "beamkit/domains/pancake.hpp"
#include "beamkit/domains/tiles.hpp"

namespace beamkit {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Beam: return "beam";
    case Algorithm::Monobeam: return "monobeam";
    case Algorithm::Bead: return "bead";
    case Algorithm::Monobead: return "monobead";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view text) {
  for (auto a : {Algorithm::Beam, Algorithm::Monobeam, Algorithm::Bead, Algorithm::Monobead}) {
    if (to_string(a) == text) return a;
  }
  throw std::invalid_argument("algorithm must be beam, monobeam, bead or monobead, got " + std::string(text));
}

std::string_view to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::Tiles: return "tiles";
    case DomainKind::Pancake: return "pancake";
    case DomainKind::Blocks: return "blocks";
    case DomainKind::Graph: return "graph";
  }
  return "?";
}

DomainKind parse_domain_kind(std::string_view text) {
  for (auto k : {DomainKind::Tiles, DomainKind::Pancake, DomainKind::Blocks, DomainKind::Graph}) {
    if (to_string(k) == text) return k;
  }
  throw std::invalid_argument("domain must be tiles, pancake, blocks or graph, got " + std::string(text));
}

SearchOptions search_options_for(const RunRequest& request) {
  SearchOptions options;
  options.node_limit = request.node_limit;
  options.time_limit = request.time_limit;
  options.trace = request.trace;
  switch (request.algorithm) {
    case Algorithm::Beam:
      options.dedup = request.dedup.value_or(Dedup::FullBeam);
      options.incumbent_pruning = false;
      break;
    case Algorithm::Monobeam:
      options.dedup = request.dedup.value_or(Dedup::SlotAware);
      options.incumbent_pruning = request.pruning;
      break;
    case Algorithm::Bead:
    case Algorithm::Monobead:
      break;
  }
  return options;
}

namespace {

void require_unit(const DomainSpec& spec) {
  if (spec.cost_model != "unit") {
    throw std::invalid_argument(std::string(to_string(spec.kind)) + " supports only the unit cost model");
  }
}

}  // namespace

std::vector<Problem> load_problems(const DomainSpec& spec, std::string_view text) {
  std::vector<Problem> problems;
  switch (spec.kind) {
    case DomainKind::Tiles: {
      const auto model = parse_tile_cost_model(spec.cost_model);
      const auto instances = parse_korf_tiles(text);
      for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& inst = instances[i];
        const auto id = std::to_string(inst.index ? *inst.index : static_cast<int>(i + 1));
        problems.emplace_back(id, TilePuzzle(model, inst.tiles));
      }
      break;
    }
    case DomainKind::Pancake: {
      const auto model = parse_pancake_cost_model(spec.cost_model);
      const auto stacks = parse_pancakes(text);
      for (std::size_t i = 0; i < stacks.size(); ++i) {
        problems.emplace_back(std::to_string(i + 1), PancakePuzzle(model, stacks[i]));
      }
      break;
    }
    case DomainKind::Blocks: {
      require_unit(spec);
      const auto instances = parse_blocks(text);
      for (std::size_t i = 0; i < instances.size(); ++i) {
        problems.emplace_back(std::to_string(i + 1),
                              BlocksWorld(spec.blocks_model, make_blocks_state(instances[i].initial),
                                          make_blocks_state(instances[i].goal)));
      }
      break;
    }
    case DomainKind::Graph:
      require_unit(spec);
      problems.emplace_back("1", graph_domain_from_spec(text));
      break;
  }
  if (problems.empty()) throw std::invalid_argument("no instances found");
  return problems;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<Problem> load_problems_from_file(const DomainSpec& spec, const std::string& path) {
  return load_problems(spec, read_text_file(path));
}

double mean_action_cost(const DomainSpec& spec, int size) {
  switch (spec.kind) {
    case DomainKind::Tiles: {
      const auto model = parse_tile_cost_model(spec.cost_model);
      const int side = size == 9 ? 3 : size == 16 ? 4 : 0;
      if (side == 0) throw std::invalid_argument("tile size must be 9 or 16");
      double total = 0;
      for (int t = 1; t < size; ++t) total += tile_move_cost(model, t, side);
      return total / (size - 1);
    }
    case DomainKind::Pancake:
      if (size < 2) throw std::invalid_argument("pancake size must be at least 2");
      return parse_pancake_cost_model(spec.cost_model) == PancakeCostModel::Heavy ? (size + 1) / 2.0 : 1.0;
    case DomainKind::Blocks:
    case DomainKind::Graph:
      return 1.0;
  }
  return 1.0;
}

}  // namespace beamkit
