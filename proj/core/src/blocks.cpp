#include "beamkit/domains/blocks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "beamkit/parse_error.hpp"
#include "text_util.hpp"

namespace beamkit {

std::string_view to_string(BlocksModel model) { return model == BlocksModel::Direct ? "direct" : "deep"; }

BlocksModel parse_blocks_model(std::string_view text) {
  if (text == "direct") return BlocksModel::Direct;
  if (text == "deep") return BlocksModel::Deep;
  throw std::invalid_argument("blocks model must be direct or deep, got " + std::string(text));
}

std::uint64_t BlocksState::hash() const {
  std::uint64_t h = mix64(count ^ (static_cast<std::uint64_t>(holding) << 8));
  int i = 0;
  for (; i + 8 <= count; i += 8) {
    std::uint64_t word = 0;
    for (int b = 0; b < 8; ++b) word |= static_cast<std::uint64_t>(below[i + b]) << (8 * b);
    h = mix64(h ^ word);
  }
  std::uint64_t tail = 0;
  for (int b = 0; i < count; ++i, ++b) tail |= static_cast<std::uint64_t>(below[i]) << (8 * b);
  return mix64(h ^ tail);
}

namespace {

std::string stacks_problem(const Stacks& stacks) {
  int n = 0;
  for (const auto& stack : stacks) {
    if (stack.empty()) return "empty stack";
    n += static_cast<int>(stack.size());
  }
  if (n < 1) return "no blocks";
  if (n > kMaxBlocks) return "at most " + std::to_string(kMaxBlocks) + " blocks supported";
  std::vector<bool> seen(n, false);
  for (const auto& stack : stacks) {
    for (int b : stack) {
      if (b < 0 || b >= n) return "block " + std::to_string(b) + " out of range 0.." + std::to_string(n - 1);
      if (seen[b]) return "block " + std::to_string(b) + " appears twice";
      seen[b] = true;
    }
  }
  return {};
}

}  // namespace

BlocksState make_blocks_state(const Stacks& stacks) {
  if (auto problem = stacks_problem(stacks); !problem.empty()) throw std::invalid_argument(problem);
  BlocksState state;
  for (const auto& stack : stacks) {
    for (std::size_t i = 0; i < stack.size(); ++i) {
      state.below[stack[i]] = i == 0 ? BlocksState::kTable : static_cast<std::uint8_t>(stack[i - 1]);
      ++state.count;
    }
  }
  return state;
}

Stacks blocks_stacks(const BlocksState& state) {
  const int n = state.count;
  std::vector<int> above(n, -1);
  for (int b = 0; b < n; ++b) {
    if (state.below[b] < n) above[state.below[b]] = b;
  }
  Stacks stacks;
  for (int b = 0; b < n; ++b) {
    if (state.below[b] != BlocksState::kTable) continue;
    std::vector<int> stack;
    for (int at = b; at != -1; at = above[at]) stack.push_back(at);
    stacks.push_back(std::move(stack));
  }
  return stacks;
}

bool blocks_valid(const BlocksState& state) {
  const int n = state.count;
  if (n < 1 || n > kMaxBlocks) return false;
  int held = 0;
  std::vector<int> supported(n, 0);
  for (int b = 0; b < n; ++b) {
    const auto on = state.below[b];
    if (on == BlocksState::kHand) {
      ++held;
      if (state.holding != b) return false;
    } else if (on != BlocksState::kTable) {
      if (on >= n || on == b) return false;
      if (++supported[on] > 1) return false;
      if (state.below[on] == BlocksState::kHand) return false;
    }
  }
  if (held > 1) return false;
  if (held == 0 && state.holding != BlocksState::kNone) return false;
  // Every chain must reach the table or the hand without cycling.
  for (int b = 0; b < n; ++b) {
    int at = b;
    for (int steps = 0; steps <= n; ++steps) {
      const auto on = state.below[at];
      if (on == BlocksState::kTable || on == BlocksState::kHand) break;
      at = on;
      if (steps == n) return false;
    }
  }
  return true;
}

int misplaced_blocks(const BlocksState& state, const BlocksState& goal) {
  const int n = state.count;
  // 0 = unknown, 1 = chain matches goal, 2 = misplaced
  std::array<std::uint8_t, kMaxBlocks> verdict{};
  std::array<int, kMaxBlocks> chain{};
  int misplaced = 0;
  for (int b = 0; b < n; ++b) {
    int len = 0;
    int at = b;
    // Walk down until the verdict is known.
    while (verdict[at] == 0) {
      chain[len++] = at;
      const auto on = state.below[at];
      if (on != goal.below[at] || on == BlocksState::kHand) {
        verdict[at] = 2;
        --len;
        break;
      }
      if (on == BlocksState::kTable) {
        verdict[at] = 1;
        --len;
        break;
      }
      at = on;
    }
    const std::uint8_t known = verdict[at];
    while (len > 0) verdict[chain[--len]] = known;
    if (verdict[b] == 2) ++misplaced;
  }
  return misplaced;
}

BlocksWorld::BlocksWorld(BlocksModel model, BlocksState start, BlocksState goal)
    : model_(model), start_(start), goal_(goal) {
  if (start.count != goal.count) throw std::invalid_argument("start and goal have different block counts");
  if (!blocks_valid(start) || !blocks_valid(goal)) throw std::invalid_argument("invalid blocks configuration");
  if (goal.holding != BlocksState::kNone) throw std::invalid_argument("goal may not hold a block");
  if (model == BlocksModel::Direct && start.holding != BlocksState::kNone) {
    throw std::invalid_argument("direct model never holds a block");
  }
}

void BlocksWorld::successors(const State& s, std::vector<Edge<State>>& out) const {
  const int n = s.count;
  std::array<bool, kMaxBlocks> covered{};
  for (int b = 0; b < n; ++b) {
    if (s.below[b] < n) covered[s.below[b]] = true;
  }
  std::array<std::uint8_t, kMaxBlocks> tops{};
  int top_count = 0;
  for (int b = 0; b < n; ++b) {
    if (!covered[b] && s.below[b] != BlocksState::kHand) tops[top_count++] = static_cast<std::uint8_t>(b);
  }

  if (model_ == BlocksModel::Direct) {
    for (int i = 0; i < top_count; ++i) {
      const int x = tops[i];
      if (s.below[x] != BlocksState::kTable) {
        State next = s;
        next.below[x] = BlocksState::kTable;
        out.push_back({next, 1.0});
      }
      for (int j = 0; j < top_count; ++j) {
        if (j == i) continue;
        State next = s;
        next.below[x] = tops[j];
        out.push_back({next, 1.0});
      }
    }
    return;
  }

  if (s.holding != BlocksState::kNone) {
    const int x = s.holding;
    State down = s;
    down.holding = BlocksState::kNone;
    down.below[x] = BlocksState::kTable;
    out.push_back({down, 1.0});
    for (int j = 0; j < top_count; ++j) {
      State next = s;
      next.holding = BlocksState::kNone;
      next.below[x] = tops[j];
      out.push_back({next, 1.0});
    }
    return;
  }
  for (int i = 0; i < top_count; ++i) {
    State next = s;
    next.holding = tops[i];
    next.below[tops[i]] = BlocksState::kHand;
    out.push_back({next, 1.0});
  }
}

std::vector<Edge<BlocksState>> BlocksWorld::successors(const State& s) const {
  std::vector<Edge<State>> out;
  successors(s, out);
  return out;
}

Cost BlocksWorld::h(const State& s) const {
  const int misplaced = misplaced_blocks(s, goal_);
  if (model_ == BlocksModel::Direct) return misplaced;
  return 2 * misplaced - (s.holding != BlocksState::kNone ? 1 : 0);
}

std::string BlocksWorld::format(const State& s) const {
  std::string out = format_stacks(blocks_stacks(s));
  if (s.holding != BlocksState::kNone) out += " [hand " + std::to_string(s.holding) + "]";
  return out;
}

Stacks single_tower(int n) {
  std::vector<int> tower(n);
  for (int b = 0; b < n; ++b) tower[b] = b;
  return {tower};
}

namespace {

Stacks parse_stacks(std::string_view text, int line) {
  Stacks stacks;
  std::size_t pos = 0;
  while (true) {
    auto bar = text.find('|', pos);
    auto part = text::trim(text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos));
    std::vector<int> stack;
    for (auto token : text::tokens(part)) {
      auto value = text::to_integer(token);
      if (!value) throw ParseError(line, "malformed token '" + std::string(token) + "'");
      stack.push_back(static_cast<int>(*value));
    }
    if (stack.empty()) throw ParseError(line, "empty stack");
    stacks.push_back(std::move(stack));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  if (auto problem = stacks_problem(stacks); !problem.empty()) throw ParseError(line, problem);
  return stacks;
}

int block_count(const Stacks& stacks) {
  int n = 0;
  for (const auto& s : stacks) n += static_cast<int>(s.size());
  return n;
}

Stacks canonical(const Stacks& stacks) { return blocks_stacks(make_blocks_state(stacks)); }

}  // namespace

std::vector<BlocksInstance> parse_blocks(std::string_view text) {
  std::vector<BlocksInstance> instances;
  for (const auto& line : text::content_lines(text)) {
    BlocksInstance instance;
    const auto arrow = line.content.find("=>");
    instance.initial = parse_stacks(line.content.substr(0, arrow), line.number);
    if (arrow == std::string_view::npos) {
      instance.goal = single_tower(block_count(instance.initial));
    } else {
      instance.goal = parse_stacks(line.content.substr(arrow + 2), line.number);
      if (block_count(instance.goal) != block_count(instance.initial)) {
        throw ParseError(line.number, "goal has a different number of blocks");
      }
    }
    instances.push_back(std::move(instance));
  }
  return instances;
}

std::string format_stacks(const Stacks& stacks) {
  std::string out;
  for (std::size_t s = 0; s < stacks.size(); ++s) {
    if (s > 0) out += " | ";
    for (std::size_t i = 0; i < stacks[s].size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(stacks[s][i]);
    }
  }
  return out;
}

std::string serialize_blocks(std::span<const BlocksInstance> instances) {
  std::ostringstream out;
  for (const auto& instance : instances) {
    out << format_stacks(canonical(instance.initial)) << " => " << format_stacks(canonical(instance.goal)) << '\n';
  }
  return out.str();
}

}  // namespace beamkit
