#include "beamkit/domains/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "beamkit/domains/tiles.hpp"

namespace beamkit {

std::uint64_t InstanceRng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return draw % bound;
}

std::vector<std::vector<int>> gen_pancake(int n, int count, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("pancake instances need n >= 2");
  if (count < 1) throw std::invalid_argument("count must be positive");
  InstanceRng rng(seed);
  std::vector<std::vector<int>> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    rng.shuffle(order);
    out.push_back(std::move(order));
  }
  return out;
}

std::vector<std::vector<int>> all_pancakes(int n) {
  if (n < 2) throw std::invalid_argument("pancake instances need n >= 2");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Stacks random_stacks(int n, InstanceRng& rng) {
  std::vector<int> blocks(n);
  std::iota(blocks.begin(), blocks.end(), 0);
  rng.shuffle(blocks);
  Stacks stacks;
  for (int b : blocks) {
    const auto choice = rng.uniform_below(stacks.size() + 1);
    if (choice == stacks.size()) {
      stacks.push_back({b});
    } else {
      stacks[choice].push_back(b);
    }
  }
  return blocks_stacks(make_blocks_state(stacks));
}

std::vector<BlocksInstance> gen_blocks(int n, int count, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("blocks instances need n >= 2");
  if (n > kMaxBlocks) throw std::invalid_argument("too many blocks");
  if (count < 1) throw std::invalid_argument("count must be positive");
  InstanceRng rng(seed);
  std::vector<BlocksInstance> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    BlocksInstance instance;
    instance.initial = random_stacks(n, rng);
    instance.goal = random_stacks(n, rng);
    out.push_back(std::move(instance));
  }
  return out;
}

std::vector<std::vector<int>> gen_tiles(int side, int count, std::uint64_t seed) {
  if (side != 3 && side != 4) throw std::invalid_argument("tile side must be 3 or 4");
  if (count < 1) throw std::invalid_argument("count must be positive");
  InstanceRng rng(seed);
  std::vector<std::vector<int>> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<int> tiles(side * side);
    std::iota(tiles.begin(), tiles.end(), 0);
    rng.shuffle(tiles);
    if (tiles_solvable(tiles, side)) out.push_back(std::move(tiles));
  }
  return out;
}

}  // namespace beamkit
