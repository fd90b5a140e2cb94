#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <queue>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "beamkit/closed_table.hpp"
#include "beamkit/domain.hpp"
#include "beamkit/search_types.hpp"

namespace beamkit {

/// A* on g + h with reopening whenever a state is reached with lower g.
/// Optimal for admissible h (consistency not required). Honors the node and
/// time limits of `limits`; other fields are ignored.
template <SearchDomain D>
SearchResult<typename D::State> optimal_oracle(const D& domain, const SearchOptions& limits = {}) {
  using State = typename D::State;
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();

  struct Record {
    State state;
    Cost g;
    std::int64_t parent;
    std::uint32_t depth;
  };
  struct OpenItem {
    Cost f;
    Cost h;
    std::uint64_t seq;
    std::uint32_t record;
  };
  struct Later {
    bool operator()(const OpenItem& a, const OpenItem& b) const {
      if (a.f != b.f) return a.f > b.f;
      if (a.h != b.h) return a.h > b.h;
      return a.seq > b.seq;
    }
  };

  std::vector<Record> records;
  absl::flat_hash_map<State, Cost, StateHash> best_g;
  std::priority_queue<OpenItem, std::vector<OpenItem>, Later> open;
  std::vector<Edge<State>> edges;
  std::uint64_t seq = 0;

  SearchResult<State> result;
  auto finish = [&](Termination termination, std::int64_t goal) {
    result.termination = termination;
    if (goal != kNoParent) {
      result.cost = records[goal].g;
      result.length = records[goal].depth;
      for (std::int64_t at = goal; at != kNoParent; at = records[at].parent) {
        result.path.push_back(records[at].state);
      }
      std::reverse(result.path.begin(), result.path.end());
    }
    const std::chrono::duration<double> elapsed = Clock::now() - started;
    result.wall_time = elapsed.count();
    return result;
  };

  State start = domain.initial();
  const Cost start_h = domain.h(start);
  best_g.emplace(start, 0.0);
  records.push_back({std::move(start), 0.0, kNoParent, 0});
  open.push({start_h, start_h, seq++, 0});

  while (!open.empty()) {
    const OpenItem item = open.top();
    open.pop();
    const std::uint32_t index = item.record;
    if (records[index].g > best_g[records[index].state]) continue;  // stale entry
    if (domain.is_goal(records[index].state)) return finish(Termination::SolutionFound, index);

    if (limits.node_limit && result.stats.expansions >= *limits.node_limit) {
      return finish(Termination::ResourceLimit, kNoParent);
    }
    if (limits.time_limit && (result.stats.expansions & 255) == 0) {
      const std::chrono::duration<double> elapsed = Clock::now() - started;
      if (elapsed.count() >= *limits.time_limit) return finish(Termination::ResourceLimit, kNoParent);
    }

    ++result.stats.expansions;
    edges.clear();
    domain.successors(records[index].state, edges);
    const Cost parent_g = records[index].g;
    const std::uint32_t parent_depth = records[index].depth;
    for (auto& edge : edges) {
      ++result.stats.generations;
      const Cost g = parent_g + edge.cost;
      auto [it, inserted] = best_g.try_emplace(edge.state, g);
      if (!inserted) {
        if (!(g < it->second)) {
          ++result.stats.duplicates_rejected;
          continue;
        }
        it->second = g;
      }
      const Cost h = domain.h(edge.state);
      records.push_back({std::move(edge.state), g, static_cast<std::int64_t>(index), parent_depth + 1});
      open.push({g + h, h, seq++, static_cast<std::uint32_t>(records.size() - 1)});
    }
  }
  return finish(Termination::Exhausted, kNoParent);
}

}  // namespace beamkit
