#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "beamkit/search_node.hpp"

namespace beamkit {

/// Binary min-heap of generated children under an ordering policy.
template <class State>
class CandidatePool {
 public:
  explicit CandidatePool(Ordering ordering) : ordering_(ordering) {}

  void push(SearchNode<State> node) {
    heap_.push_back(std::move(node));
    std::push_heap(heap_.begin(), heap_.end(), Later{ordering_});
  }

  /// Removes and returns the node with the least ordering key.
  SearchNode<State> pop() {
    assert(!heap_.empty());
    std::pop_heap(heap_.begin(), heap_.end(), Later{ordering_});
    SearchNode<State> node = std::move(heap_.back());
    heap_.pop_back();
    return node;
  }

  const SearchNode<State>& top() const {
    assert(!heap_.empty());
    return heap_.front();
  }

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  void clear() { heap_.clear(); }
  Ordering ordering() const { return ordering_; }

 private:
  struct Later {
    Ordering ordering;
    bool operator()(const SearchNode<State>& a, const SearchNode<State>& b) const {
      return selected_before(b, a, ordering);
    }
  };

  Ordering ordering_;
  std::vector<SearchNode<State>> heap_;
};

}  // namespace beamkit
