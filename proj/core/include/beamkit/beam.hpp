#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "beamkit/candidate_pool.hpp"
#include "beamkit/closed_table.hpp"
#include "beamkit/search_node.hpp"
#include "beamkit/search_types.hpp"

namespace beamkit {

/// `width` slots, each holding a node or empty. Only occupied slots are
/// stored, in increasing slot order, so very wide beams cost nothing for the
/// slots they never fill. A node's `width` field is its 1-based slot.
template <class State>
class Beam {
 public:
  explicit Beam(std::uint32_t width) : width_(width) {}

  std::uint32_t width() const { return width_; }

  /// Slots must be placed in increasing order.
  void place(std::uint32_t slot, SearchNode<State> node) {
    assert(slot >= 1 && slot <= width_);
    assert(nodes_.empty() || nodes_.back().width < slot);
    node.width = slot;
    nodes_.push_back(std::move(node));
  }

  const SearchNode<State>* at(std::uint32_t slot) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), slot,
                               [](const SearchNode<State>& n, std::uint32_t s) { return n.width < s; });
    if (it == nodes_.end() || it->width != slot) return nullptr;
    return &*it;
  }

  std::span<const SearchNode<State>> nodes() const { return nodes_; }
  std::size_t occupied() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  void clear() { nodes_.clear(); }

  /// Empties every slot whose node satisfies `pred`; returns how many.
  template <class Pred>
  std::size_t empty_slots_if(Pred pred) {
    const auto before = nodes_.size();
    std::erase_if(nodes_, pred);
    return before - nodes_.size();
  }

 private:
  std::uint32_t width_;
  std::vector<SearchNode<State>> nodes_;
};

/// Empties every slot with f >= solution_cost. A no-op while the cost is
/// infinite. `on_prune` sees each node before it is dropped.
template <class State, class OnPrune>
std::size_t prune_next_beam(Beam<State>& next_beam, Cost solution_cost, OnPrune&& on_prune) {
  if (solution_cost == kInfinity) return 0;
  return next_beam.empty_slots_if([&](const SearchNode<State>& node) {
    if (node.f >= solution_cost) {
      on_prune(node);
      return true;
    }
    return false;
  });
}

template <class State>
std::size_t prune_next_beam(Beam<State>& next_beam, Cost solution_cost) {
  return prune_next_beam(next_beam, solution_cost, [](const SearchNode<State>&) {});
}

/// Full-beam generation test: the child is a duplicate iff its state is
/// closed with f no greater than the child's.
template <class State>
bool full_beam_duplicate(const ClosedTable<State>& closed, const SearchNode<State>& child) {
  auto entry = closed.lookup(child.state);
  return entry && entry->f <= child.f;
}

/// Pops the node for beam slot `slot` (1-based).
///
/// None and FullBeam take the minimum; FullBeam also records the node in
/// `closed` (replacing an entry only when the new f is lower). SlotAware
/// stamps the node with the slot and keeps popping until a node passes:
///   unseen state                      -> store {f, slot}, accept
///   slot < closed width               -> replace entry, accept
///   f <= closed f                     -> accept; replace only if same slot
///   otherwise                         -> discard, try the next candidate
/// Returns nothing once the pool runs dry. `on_reject` sees discarded nodes.
template <class State, class OnReject>
std::optional<SearchNode<State>> select_for_slot(CandidatePool<State>& pool, ClosedTable<State>& closed,
                                                 std::uint32_t slot, Dedup dedup, OnReject&& on_reject) {
  while (!pool.empty()) {
    SearchNode<State> node = pool.pop();
    node.width = slot;
    switch (dedup) {
      case Dedup::None:
        return node;
      case Dedup::FullBeam: {
        ClosedEntry* entry = closed.find(node.state);
        if (entry == nullptr) {
          closed.store(node.state, {node.f, slot});
        } else if (node.f < entry->f) {
          *entry = {node.f, slot};
        }
        return node;
      }
      case Dedup::SlotAware: {
        ClosedEntry* dup = closed.find(node.state);
        if (dup == nullptr) {
          closed.store(node.state, {node.f, slot});
          return node;
        }
        if (node.width < dup->width) {
          *dup = {node.f, node.width};
          return node;
        }
        if (node.f <= dup->f) {
          if (node.width == dup->width) *dup = {node.f, node.width};
          return node;
        }
        on_reject(node);
        break;
      }
    }
  }
  return std::nullopt;
}

template <class State>
std::optional<SearchNode<State>> select_for_slot(CandidatePool<State>& pool, ClosedTable<State>& closed,
                                                 std::uint32_t slot, Dedup dedup) {
  return select_for_slot(pool, closed, slot, dedup, [](const SearchNode<State>&) {});
}

}  // namespace beamkit
