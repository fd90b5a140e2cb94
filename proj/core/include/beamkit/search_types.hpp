#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "beamkit/search_node.hpp"

namespace beamkit {

enum class Dedup {
  None,
  FullBeam,   // discard a child whose closed copy has f <= f(child)
  SlotAware,  // closed entries remember the slot; see select_for_slot
};

enum class Termination { SolutionFound, Exhausted, ResourceLimit };

std::string_view to_string(Dedup dedup);
std::string_view to_string(Termination termination);
Dedup parse_dedup(std::string_view text);

enum class TraceEventKind { Selected, PrunedIncumbent, RejectedDuplicate, LeftEmpty };

std::string_view to_string(TraceEventKind kind);

/// One (level, slot) record. Node fields are meaningless for LeftEmpty.
struct TraceEvent {
  std::uint32_t level = 0;
  std::uint32_t slot = 0;
  TraceEventKind kind = TraceEventKind::Selected;
  std::uint64_t key = 0;
  Cost g = 0;
  Cost h = 0;
  Cost f = 0;
  std::uint32_t depth = 0;
  std::uint32_t origin_slot = 0;
};

class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual void record(const TraceEvent& event) = 0;
};

/// Keeps every event in memory; used by the prefix and pruning checkers.
class TraceRecorder final : public TraceSink {
 public:
  void record(const TraceEvent& event) override { events_.push_back(event); }
  const std::vector<TraceEvent>& events() const { return events_; }
  void clear() { events_.clear(); }

 private:
  std::vector<TraceEvent> events_;
};

struct SearchOptions {
  Ordering policy = Ordering::CostGuided;
  bool incumbent_pruning = false;
  Dedup dedup = Dedup::None;
  std::optional<std::uint64_t> node_limit;  // cap on expansions
  std::optional<double> time_limit;         // seconds
  TraceSink* trace = nullptr;
};

struct SearchStats {
  std::uint64_t expansions = 0;
  std::uint64_t generations = 0;
  std::uint64_t duplicates_rejected = 0;
  std::uint64_t incumbent_pruned = 0;
  std::uint64_t levels = 0;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

template <class State>
struct SearchResult {
  std::vector<State> path;  // initial state first, goal last; empty if unsolved
  Cost cost = kInfinity;
  std::size_t length = 0;
  SearchStats stats;
  double wall_time = 0;
  Termination termination = Termination::Exhausted;
  /// Set when full-beam duplicate elimination ran inside monobeam, which
  /// forfeits the width-monotonicity guarantee.
  bool guarantee_void = false;

  bool has_solution() const { return !path.empty(); }
};

class InvalidSearchArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace beamkit
