#pragma once

// Level-synchronous beam engines: baseline beam, monobeam, and the
// distance-guided bead / monobead configurations of the two.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "beamkit/beam.hpp"
#include "beamkit/candidate_pool.hpp"
#include "beamkit/closed_table.hpp"
#include "beamkit/domain.hpp"
#include "beamkit/search_node.hpp"
#include "beamkit/search_types.hpp"

namespace beamkit {

namespace detail {

/// Per-run bookkeeping shared by the engines: the trail of expanded nodes
/// (for path reconstruction), counters, limits, tracing and the incumbent.
template <SearchDomain D>
class EngineRun {
 public:
  using State = typename D::State;
  using Node = SearchNode<State>;

  EngineRun(const D& domain, const SearchOptions& options)
      : domain_(domain), options_(options), started_(Clock::now()) {}

  Node make_start() {
    Node start;
    start.state = domain_.initial();
    start.g = 0;
    start.h = domain_.h(start.state);
    start.d = domain_.d(start.state);
    start.f = start.h;
    start.depth = 0;
    start.origin_slot = 1;
    start.width = 1;
    start.seq = next_seq_++;
    return start;
  }

  /// True once the expansion or time budget is spent.
  bool out_of_budget() {
    if (options_.node_limit && stats.expansions >= *options_.node_limit) return true;
    if (options_.time_limit && (stats.expansions & 63) == 0) {
      const std::chrono::duration<double> elapsed = Clock::now() - started_;
      if (elapsed.count() >= *options_.time_limit) return true;
    }
    return false;
  }

  /// Generates the children of `parent` (pathmax applied, origin slot set)
  /// and hands each to `sink` in successor order.
  template <class Sink>
  void expand(const Node& parent, Sink&& sink) {
    ++stats.expansions;
    const auto parent_index = static_cast<std::int64_t>(trail_.size());
    trail_.push_back({parent.state, parent.parent});
    edges_.clear();
    domain_.successors(parent.state, edges_);
    for (auto& edge : edges_) {
      ++stats.generations;
      Node child;
      child.state = std::move(edge.state);
      child.g = parent.g + edge.cost;
      child.h = domain_.h(child.state);
      child.d = domain_.d(child.state);
      child.f = pathmax_adjust(parent.f, child.g, child.h);
      child.depth = parent.depth + 1;
      child.origin_slot = parent.width;
      child.seq = next_seq_++;
      child.parent = parent_index;
      sink(std::move(child));
    }
  }

  /// Records `goal` if it beats the incumbent (strict, so the first of equal
  /// solutions wins).
  bool offer_goal(const Node& goal) {
    if (!(goal.f < solution_cost)) return false;
    solution_cost = goal.f;
    incumbent = goal;
    return true;
  }

  bool tracing() const { return options_.trace != nullptr; }

  void trace(std::uint32_t level, std::uint32_t slot, TraceEventKind kind, const Node* node) {
    if (options_.trace == nullptr) return;
    TraceEvent event;
    event.level = level;
    event.slot = slot;
    event.kind = kind;
    if (node != nullptr) {
      event.key = domain_.key(node->state);
      event.g = node->g;
      event.h = node->h;
      event.f = node->f;
      event.depth = node->depth;
      event.origin_slot = node->origin_slot;
    }
    options_.trace->record(event);
  }

  SearchResult<State> finish(Termination termination) {
    SearchResult<State> result;
    result.stats = stats;
    result.termination = termination;
    if (incumbent) {
      result.cost = incumbent->g;
      result.length = incumbent->depth;
      result.path.push_back(incumbent->state);
      for (std::int64_t at = incumbent->parent; at != kNoParent; at = trail_[at].parent) {
        result.path.push_back(trail_[at].state);
      }
      std::reverse(result.path.begin(), result.path.end());
    }
    const std::chrono::duration<double> elapsed = Clock::now() - started_;
    result.wall_time = elapsed.count();
    return result;
  }

  const D& domain() const { return domain_; }

  SearchStats stats;
  Cost solution_cost = kInfinity;
  std::optional<Node> incumbent;

 private:
  using Clock = std::chrono::steady_clock;

  struct TrailEntry {
    State state;
    std::int64_t parent;
  };

  const D& domain_;
  const SearchOptions& options_;
  Clock::time_point started_;
  std::uint64_t next_seq_ = 0;
  std::vector<TrailEntry> trail_;
  std::vector<Edge<State>> edges_;
};

inline void require_width(std::uint32_t width) {
  if (width == 0) throw InvalidSearchArgument("beam width must be at least 1");
}

}  // namespace detail

/// Baseline beam search. Each level expands the whole beam; goal children
/// update the incumbent, other children are dropped if full-beam duplicate
/// elimination finds a closed copy with f <= theirs, and the `width` best
/// survivors under `options.policy` form the next beam. Stops after the
/// level on which a solution first appears, or when the beam empties.
/// `options.incumbent_pruning` has no effect here.
template <SearchDomain D>
SearchResult<typename D::State> beam_search(const D& domain, std::uint32_t width,
                                            const SearchOptions& options) {
  using State = typename D::State;
  detail::require_width(width);
  if (options.dedup == Dedup::SlotAware) {
    throw InvalidSearchArgument("baseline beam supports only none or full-beam duplicate elimination");
  }

  detail::EngineRun<D> run(domain, options);
  auto start = run.make_start();
  run.trace(0, 1, TraceEventKind::Selected, &start);
  if (domain.is_goal(start.state)) {
    run.offer_goal(start);
    return run.finish(Termination::SolutionFound);
  }

  const bool full_beam = options.dedup == Dedup::FullBeam;
  ClosedTable<State> closed;
  if (full_beam) closed.store(start.state, {start.f, 1});

  Beam<State> beam(width);
  beam.place(1, std::move(start));
  CandidatePool<State> pool(options.policy);
  std::uint32_t level = 0;

  while (!beam.empty() && !run.incumbent) {
    pool.clear();
    const std::uint32_t next_level = level + 1;
    for (const auto& node : beam.nodes()) {
      if (run.out_of_budget()) return run.finish(Termination::ResourceLimit);
      run.expand(node, [&](SearchNode<State>&& child) {
        if (domain.is_goal(child.state)) {
          run.offer_goal(child);
          return;
        }
        if (full_beam && full_beam_duplicate(closed, child)) {
          ++run.stats.duplicates_rejected;
          run.trace(next_level, node.width, TraceEventKind::RejectedDuplicate, &child);
          return;
        }
        pool.push(std::move(child));
      });
    }
    level = next_level;
    run.stats.levels = level;
    if (run.incumbent) break;

    Beam<State> next(width);
    const Dedup selection = full_beam ? Dedup::FullBeam : Dedup::None;
    for (std::uint32_t slot = 1; slot <= width && !pool.empty(); ++slot) {
      auto chosen = select_for_slot(pool, closed, slot, selection);
      run.trace(level, slot, TraceEventKind::Selected, &*chosen);
      next.place(slot, std::move(*chosen));
    }
    beam = std::move(next);
  }
  return run.finish(run.incumbent ? Termination::SolutionFound : Termination::Exhausted);
}

/// Monotonic beam search. Slots are filled in order: slot c's node is chosen
/// from children of the current beam's slots 1..c only, so a wider beam never
/// changes what the narrower prefix selects. Search continues until no beam
/// node has f below the incumbent. Optional incumbent pruning empties next-
/// beam slots with f >= incumbent; SlotAware duplicate elimination keeps the
/// guarantee, FullBeam is accepted but voids it.
template <SearchDomain D>
SearchResult<typename D::State> monobeam(const D& domain, std::uint32_t width, const SearchOptions& options) {
  using State = typename D::State;
  using Node = SearchNode<State>;
  detail::require_width(width);

  detail::EngineRun<D> run(domain, options);
  auto start = run.make_start();
  run.trace(0, 1, TraceEventKind::Selected, &start);
  if (domain.is_goal(start.state)) {
    run.offer_goal(start);
    return run.finish(Termination::SolutionFound);
  }

  const Dedup dedup = options.dedup;
  ClosedTable<State> closed;
  if (dedup != Dedup::None) closed.store(start.state, {start.f, 1});

  Beam<State> beam(width);
  beam.place(1, std::move(start));
  CandidatePool<State> pool(options.policy);
  std::uint32_t level = 0;

  auto has_open_node = [&](const Beam<State>& b) {
    for (const auto& node : b.nodes()) {
      if (node.f < run.solution_cost) return true;
    }
    return false;
  };

  while (has_open_node(beam)) {
    pool.clear();
    const std::uint32_t next_level = level + 1;
    Beam<State> next(width);
    const auto nodes = beam.nodes();
    std::size_t cursor = 0;

    for (std::uint32_t slot = 1; slot <= width; ++slot) {
      if (cursor < nodes.size() && nodes[cursor].width == slot) {
        if (run.out_of_budget()) {
          auto result = run.finish(Termination::ResourceLimit);
          result.guarantee_void = dedup == Dedup::FullBeam;
          return result;
        }
        const Node& node = nodes[cursor++];
        run.expand(node, [&](Node&& child) {
          if (domain.is_goal(child.state)) {
            run.offer_goal(child);
            return;
          }
          if (dedup == Dedup::FullBeam && full_beam_duplicate(closed, child)) {
            ++run.stats.duplicates_rejected;
            run.trace(next_level, slot, TraceEventKind::RejectedDuplicate, &child);
            return;
          }
          pool.push(std::move(child));
        });
      }
      if (pool.empty()) {
        if (cursor >= nodes.size()) break;  // nothing left to feed later slots
        run.trace(next_level, slot, TraceEventKind::LeftEmpty, nullptr);
        continue;
      }
      auto chosen = select_for_slot(pool, closed, slot, dedup, [&](const Node& rejected) {
        ++run.stats.duplicates_rejected;
        run.trace(next_level, slot, TraceEventKind::RejectedDuplicate, &rejected);
      });
      if (chosen) {
        run.trace(next_level, slot, TraceEventKind::Selected, &*chosen);
        next.place(slot, std::move(*chosen));
      } else {
        run.trace(next_level, slot, TraceEventKind::LeftEmpty, nullptr);
      }
    }

    if (options.incumbent_pruning) {
      run.stats.incumbent_pruned += prune_next_beam(next, run.solution_cost, [&](const Node& pruned) {
        run.trace(next_level, pruned.width, TraceEventKind::PrunedIncumbent, &pruned);
      });
    }
    beam = std::move(next);
    level = next_level;
    run.stats.levels = level;
  }

  auto result = run.finish(run.incumbent ? Termination::SolutionFound : Termination::Exhausted);
  result.guarantee_void = dedup == Dedup::FullBeam;
  return result;
}

/// Beam search ordered on depth + d with full-beam duplicate elimination;
/// f decides duplicates and incumbents. Only the limits and trace of
/// `limits` are used.
template <SearchDomain D>
SearchResult<typename D::State> bead(const D& domain, std::uint32_t width, const SearchOptions& limits = {}) {
  SearchOptions options = limits;
  options.policy = Ordering::DistanceGuided;
  options.dedup = Dedup::FullBeam;
  options.incumbent_pruning = false;
  return beam_search(domain, width, options);
}

/// Monobeam ordered on depth + d, slot-aware duplicate elimination and no
/// incumbent pruning. Only the limits and trace of `limits` are used.
template <SearchDomain D>
SearchResult<typename D::State> monobead(const D& domain, std::uint32_t width, const SearchOptions& limits = {}) {
  SearchOptions options = limits;
  options.policy = Ordering::DistanceGuided;
  options.dedup = Dedup::SlotAware;
  options.incumbent_pruning = false;
  return monobeam(domain, width, options);
}

}  // namespace beamkit
