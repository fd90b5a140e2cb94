#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "beamkit/domains/blocks.hpp"

namespace beamkit {

/// Instance generators. All draw from std::mt19937_64 (whose output sequence
/// is fixed by the standard) through `uniform_below`, a rejection sampler,
/// so a given (n, count, seed) yields the same instances on every platform.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound), bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Fisher-Yates, last position first.
  template <class T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// `count` uniformly random permutations of 1..n (n >= 2).
std::vector<std::vector<int>> gen_pancake(int n, int count, std::uint64_t seed);
/// Every permutation of 1..n in lexicographic order.
std::vector<std::vector<int>> all_pancakes(int n);

/// Random stacks: blocks are visited in shuffled order and each either starts
/// a new stack or goes on top of an existing one, chosen uniformly among the
/// (stacks + 1) options. Initial and goal are drawn independently.
Stacks random_stacks(int n, InstanceRng& rng);
std::vector<BlocksInstance> gen_blocks(int n, int count, std::uint64_t seed);

/// Random solvable tile permutations (side 3 or 4): shuffle, then reject
/// unsolvable parity.
std::vector<std::vector<int>> gen_tiles(int side, int count, std::uint64_t seed);

}  // namespace beamkit
