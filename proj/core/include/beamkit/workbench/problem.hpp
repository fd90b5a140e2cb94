#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "beamkit/domain.hpp"
#include "beamkit/domains/blocks.hpp"
#include "beamkit/engines.hpp"
#include "beamkit/oracle.hpp"
#include "beamkit/search_types.hpp"

namespace beamkit {

enum class Algorithm { Beam, Monobeam, Bead, Monobead };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view text);

/// One engine invocation. Unset `dedup` means the algorithm's default:
/// full-beam for beam/bead, slot-aware for monobeam/monobead. `pruning`
/// applies to monobeam only; monobead never prunes on the incumbent.
struct RunRequest {
  Algorithm algorithm = Algorithm::Monobeam;
  std::uint32_t width = 1;
  bool pruning = true;
  std::optional<Dedup> dedup;
  std::optional<std::uint64_t> node_limit;
  std::optional<double> time_limit;
  TraceSink* trace = nullptr;
};

SearchOptions search_options_for(const RunRequest& request);

/// State-free digest of a SearchResult; `path` holds formatted states.
struct RunSummary {
  Termination termination = Termination::Exhausted;
  Cost cost = kInfinity;
  std::size_t length = 0;
  SearchStats stats;
  double wall_time = 0;
  bool guarantee_void = false;
  std::vector<std::string> path;

  bool solved() const { return termination == Termination::SolutionFound; }
};

template <SearchDomain D>
RunSummary summarize(const D& domain, const SearchResult<typename D::State>& result) {
  RunSummary summary;
  summary.termination = result.termination;
  summary.cost = result.cost;
  summary.length = result.length;
  summary.stats = result.stats;
  summary.wall_time = result.wall_time;
  summary.guarantee_void = result.guarantee_void;
  summary.path.reserve(result.path.size());
  for (const auto& state : result.path) summary.path.push_back(domain.format(state));
  return summary;
}

template <SearchDomain D>
SearchResult<typename D::State> run_engine(const D& domain, const RunRequest& request) {
  const SearchOptions options = search_options_for(request);
  switch (request.algorithm) {
    case Algorithm::Beam: return beam_search(domain, request.width, options);
    case Algorithm::Monobeam: return monobeam(domain, request.width, options);
    case Algorithm::Bead: return bead(domain, request.width, options);
    case Algorithm::Monobead: return monobead(domain, request.width, options);
  }
  throw InvalidSearchArgument("unknown algorithm");
}

/// A domain instance behind a uniform interface, so the workbench can sweep
/// tiles, pancakes, blocks and graphs alike. Copies share the domain.
class Problem {
 public:
  template <SearchDomain D>
  Problem(std::string id, D domain)
      : id_(std::move(id)), impl_(std::make_shared<const Model<D>>(std::move(domain))) {}

  const std::string& id() const { return id_; }
  RunSummary run(const RunRequest& request) const { return impl_->run(request); }
  /// Optimal cost by A*, or infinity if the limits are hit first.
  RunSummary solve_optimally(const SearchOptions& limits = {}) const { return impl_->optimal(limits); }

 private:
  struct Concept {
    virtual ~Concept() = default;
    virtual RunSummary run(const RunRequest& request) const = 0;
    virtual RunSummary optimal(const SearchOptions& limits) const = 0;
  };
  template <SearchDomain D>
  struct Model final : Concept {
    explicit Model(D d) : domain(std::move(d)) {}
    RunSummary run(const RunRequest& request) const override {
      return summarize(domain, run_engine(domain, request));
    }
    RunSummary optimal(const SearchOptions& limits) const override {
      return summarize(domain, optimal_oracle(domain, limits));
    }
    D domain;
  };

  std::string id_;
  std::shared_ptr<const Concept> impl_;
};

enum class DomainKind { Tiles, Pancake, Blocks, Graph };

std::string_view to_string(DomainKind kind);
DomainKind parse_domain_kind(std::string_view text);

/// Which domain to build from instance text. `cost_model` is a tile model
/// (unit|heavy|sqrt|inverse|reverse) or pancake model (unit|heavy); blocks
/// and graphs accept only unit.
struct DomainSpec {
  DomainKind kind = DomainKind::Tiles;
  std::string cost_model = "unit";
  BlocksModel blocks_model = BlocksModel::Direct;
};

/// One Problem per instance in `text`; ids are the instance's index token
/// when present, else its 1-based position. Throws ParseError or
/// std::invalid_argument.
std::vector<Problem> load_problems(const DomainSpec& spec, std::string_view text);
std::vector<Problem> load_problems_from_file(const DomainSpec& spec, const std::string& path);

/// Mean cost over the domain's distinct action costs (the length/cost
/// reference slope): for tiles the mean move cost over tiles 1..N-1, for
/// heavy pancakes the mean id (n+1)/2, otherwise 1. `size` is the tile count
/// (9 or 16) or the number of pancakes.
double mean_action_cost(const DomainSpec& spec, int size);

std::string read_text_file(const std::string& path);

}  // namespace beamkit
