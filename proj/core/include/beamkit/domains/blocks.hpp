#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beamkit/domain.hpp"

namespace beamkit {

enum class BlocksModel {
  Direct,  // move a top block onto another stack or the table: one action
  Deep,    // pick up and put down are separate actions
};

std::string_view to_string(BlocksModel model);
BlocksModel parse_blocks_model(std::string_view text);

inline constexpr int kMaxBlocks = 64;

/// Stacks listed bottom to top, blocks numbered 0..n-1.
using Stacks = std::vector<std::vector<int>>;

/// What each block rests on: another block, the table, or the hand.
struct BlocksState {
  static constexpr std::uint8_t kTable = 0xFF;
  static constexpr std::uint8_t kHand = 0xFE;
  static constexpr std::uint8_t kNone = 0xFD;

  std::array<std::uint8_t, kMaxBlocks> below{};
  std::uint8_t count = 0;
  std::uint8_t holding = kNone;

  std::uint64_t hash() const;
  friend bool operator==(const BlocksState&, const BlocksState&) = default;
};

/// Throws std::invalid_argument unless every block 0..n-1 appears exactly once.
BlocksState make_blocks_state(const Stacks& stacks);
/// Canonical stacks: ordered by bottom block. The held block, if any, is left out.
Stacks blocks_stacks(const BlocksState& state);
bool blocks_valid(const BlocksState& state);

/// Blocks whose chain of supports down to the table differs from the goal's.
int misplaced_blocks(const BlocksState& state, const BlocksState& goal);

/// Blocks world with unit action costs. Successor order: Direct takes each
/// top block in id order and moves it to the table (if not already there),
/// then onto each other top block in id order. Deep puts a held block on the
/// table then on each top block; with an empty hand it picks up each top
/// block in id order. h counts misplaced blocks (Direct) or twice that,
/// less one for a block already in hand (Deep); d equals h.
class BlocksWorld {
 public:
  using State = BlocksState;

  BlocksWorld(BlocksModel model, BlocksState start, BlocksState goal);

  State initial() const { return start_; }
  void successors(const State& s, std::vector<Edge<State>>& out) const;
  std::vector<Edge<State>> successors(const State& s) const;
  bool is_goal(const State& s) const { return s == goal_; }
  Cost h(const State& s) const;
  double d(const State& s) const { return h(s); }
  std::uint64_t key(const State& s) const { return s.hash(); }
  std::string format(const State& s) const;

  BlocksModel model() const { return model_; }
  const State& goal() const { return goal_; }

 private:
  BlocksModel model_;
  BlocksState start_;
  BlocksState goal_;
};

struct BlocksInstance {
  Stacks initial;
  Stacks goal;
};

/// Default goal when a line names none: one tower 0..n-1 from the table up.
Stacks single_tower(int n);

/// One instance per line: stacks separated by `|`, blocks by spaces, listed
/// bottom to top, optionally followed by `=>` and the goal stacks.
/// Throws ParseError.
std::vector<BlocksInstance> parse_blocks(std::string_view text);
std::string format_stacks(const Stacks& stacks);
std::string serialize_blocks(std::span<const BlocksInstance> instances);

}  // namespace beamkit
