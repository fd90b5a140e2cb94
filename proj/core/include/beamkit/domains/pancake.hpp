#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beamkit/domain.hpp"

namespace beamkit {

enum class PancakeCostModel { Unit, Heavy };

std::string_view to_string(PancakeCostModel model);
PancakeCostModel parse_pancake_cost_model(std::string_view text);

inline constexpr int kMaxPancakes = 96;

/// Stack of pancakes 1..N, index 0 on top. The plate under the bottom
/// pancake counts as pancake N+1. Goal is 1 2 ... N.
struct PancakeStack {
  std::array<std::uint8_t, kMaxPancakes> cakes{};
  std::uint8_t size = 0;

  std::span<const std::uint8_t> view() const { return {cakes.data(), size}; }
  std::uint64_t hash() const;
  friend bool operator==(const PancakeStack& a, const PancakeStack& b) {
    return a.size == b.size && a.cakes == b.cakes;
  }
};

/// Throws std::invalid_argument unless `order` is a permutation of 1..N, N >= 2.
PancakeStack make_stack(std::span<const int> order);
std::vector<int> stack_order(const PancakeStack& stack);

/// Number of adjacent pairs (plate included) that differ by more than one.
int gap_h(std::span<const std::uint8_t> stack);
/// Sum over those gap pairs of the smaller pancake id. A flip splits exactly
/// one adjacency and costs one of its two pancakes, so every gap costs at
/// least its smaller member to remove.
double heavy_gap_h(std::span<const std::uint8_t> stack);

/// Cost of flipping the top `k` pancakes. Heavy charges the id of the
/// pancake directly above the spatula, i.e. the deepest one flipped
/// (0-based position k-1).
double pancake_flip_cost(std::span<const std::uint8_t> stack, int k, PancakeCostModel model);

/// Pancake sorting. Successors flip the top k for k = 2..N in that order.
/// h is the gap heuristic (heavy-gap under Heavy); d is always the gap count.
class PancakePuzzle {
 public:
  using State = PancakeStack;

  PancakePuzzle(PancakeCostModel model, PancakeStack start);
  PancakePuzzle(PancakeCostModel model, std::span<const int> order);

  State initial() const { return start_; }
  void successors(const State& s, std::vector<Edge<State>>& out) const;
  std::vector<Edge<State>> successors(const State& s) const;
  bool is_goal(const State& s) const;
  Cost h(const State& s) const;
  double d(const State& s) const { return gap_h(s.view()); }
  std::uint64_t key(const State& s) const { return s.hash(); }
  std::string format(const State& s) const;

  int size() const { return start_.size; }
  PancakeCostModel model() const { return model_; }

 private:
  PancakeCostModel model_;
  PancakeStack start_;
};

/// One permutation of 1..N per line, top first. Throws ParseError.
std::vector<std::vector<int>> parse_pancakes(std::string_view text);
std::string serialize_pancakes(std::span<const std::vector<int>> stacks);

}  // namespace beamkit
