#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include <absl/container/flat_hash_map.h>

#include "beamkit/search_node.hpp"

namespace beamkit {

/// f of the closed copy and the beam slot at which it was selected.
struct ClosedEntry {
  Cost f = 0;
  std::uint32_t width = 1;

  friend bool operator==(const ClosedEntry&, const ClosedEntry&) = default;
};

/// Hashes any state exposing a 64-bit `hash()`.
struct StateHash {
  template <class State>
  std::size_t operator()(const State& s) const {
    return static_cast<std::size_t>(s.hash());
  }
};

/// State -> ClosedEntry, at most one entry per state. Keys are full states,
/// so equality never depends on the 64-bit hash.
template <class State>
class ClosedTable {
 public:
  std::optional<ClosedEntry> lookup(const State& state) const {
    auto it = map_.find(state);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  /// Inserts or replaces.
  void store(const State& state, ClosedEntry entry) { map_.insert_or_assign(state, entry); }

  ClosedEntry* find(const State& state) {
    auto it = map_.find(state);
    return it == map_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return map_.size(); }
  void clear() { map_.clear(); }
  void reserve(std::size_t n) { map_.reserve(n); }

 private:
  absl::flat_hash_map<State, ClosedEntry, StateHash> map_;
};

}  // namespace beamkit
