#include <gtest/gtest.h>

#include <random>

#include "beamkit/domains/generators.hpp"
#include "beamkit/domains/pancake.hpp"
#include "beamkit/oracle.hpp"
#include "beamkit/parse_error.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

namespace beamkit {
namespace {

std::vector<std::uint8_t> cakes(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

TEST(PancakeFlip, HeavyChargesPancakeAboveSpatula) {
  const auto s = cakes({5, 2, 4, 1, 3});
  EXPECT_EQ(pancake_flip_cost(s, 2, PancakeCostModel::Heavy), 2);
  EXPECT_EQ(pancake_flip_cost(s, 5, PancakeCostModel::Heavy), 3);
  for (int k = 2; k <= 5; ++k) EXPECT_EQ(pancake_flip_cost(s, k, PancakeCostModel::Unit), 1);
}

TEST(PancakeSuccessors, OrderAndCount) {
  const PancakePuzzle p(PancakeCostModel::Heavy, std::vector<int>{5, 2, 4, 1, 3});
  const auto succ = p.successors(p.initial());
  ASSERT_EQ(succ.size(), 4u);
  EXPECT_EQ(stack_order(succ[0].state), (std::vector<int>{2, 5, 4, 1, 3}));
  EXPECT_EQ(succ[0].cost, 2);
  EXPECT_EQ(stack_order(succ[3].state), (std::vector<int>{3, 1, 4, 2, 5}));
  const PancakePuzzle two(PancakeCostModel::Unit, std::vector<int>{2, 1});
  EXPECT_EQ(two.successors(two.initial()).size(), 1u);
}

TEST(PancakeHeuristic, SortedIsZero) {
  const auto s = cakes({1, 2, 3, 4, 5});
  EXPECT_EQ(gap_h(s), 0);
  EXPECT_EQ(heavy_gap_h(s), 0);
}

// Gaps in 2 4 1 3 over plate 5: (2,4) (4,1) (1,3) and (3,plate), the last
// because the bottom pancake 3 is not 4.
TEST(PancakeHeuristic, HandCountedGaps) {
  const auto s = cakes({2, 4, 1, 3});
  EXPECT_EQ(gap_h(s), 4);
  EXPECT_EQ(heavy_gap_h(s), 2 + 1 + 1 + 3);
  const PancakePuzzle p(PancakeCostModel::Unit, std::vector<int>{2, 4, 1, 3});
  EXPECT_LE(gap_h(s), *testing::bfs_length(p));
}

TEST(PancakeHeuristic, PlateGapOnly) {
  const auto s = cakes({2, 1});  // (2,1) adjacent, (1, plate 3) is a gap
  EXPECT_EQ(gap_h(s), 1);
  EXPECT_EQ(heavy_gap_h(s), 1);
}

// Each flip changes exactly one adjacency, so gap_h moves by at most one,
// and flipping the same k again restores the stack at the same cost.
TEST(PancakeProperty, GapConsistencyAndSelfInverseFlips) {
  for (auto model : {PancakeCostModel::Unit, PancakeCostModel::Heavy}) {
    for (const auto& order : gen_pancake(12, 40, 8)) {
      const PancakePuzzle p(model, order);
      const auto s = p.initial();
      const auto succ = p.successors(s);
      for (std::size_t i = 0; i < succ.size(); ++i) {
        EXPECT_LE(std::abs(gap_h(succ[i].state.view()) - gap_h(s.view())), 1);
        const auto back = p.successors(succ[i].state);
        EXPECT_TRUE(back[i].state == s);
        if (model == PancakeCostModel::Heavy) {
          // The pancake above the spatula changes, so costs differ by direction.
          EXPECT_EQ(back[i].cost, s.cakes[0]);
          EXPECT_EQ(succ[i].cost, s.cakes[i + 1]);
        } else {
          EXPECT_EQ(back[i].cost, succ[i].cost);
        }
      }
      EXPECT_EQ(p.d(s), gap_h(s.view()));
    }
  }
}

TEST(PancakeParse, RoundTripAndErrors) {
  const auto stacks = parse_pancakes("# two\n3 1 2\n\n1 2\n");
  ASSERT_EQ(stacks.size(), 2u);
  EXPECT_EQ(stacks[0], (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(parse_pancakes(serialize_pancakes(stacks)), stacks);
  EXPECT_THROW(parse_pancakes("1 2 2\n"), ParseError);
  EXPECT_THROW(parse_pancakes("1 3\n"), ParseError);
  EXPECT_THROW(parse_pancakes("1\n"), ParseError);
  try {
    parse_pancakes("1 2\n2 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(PancakeOracle, SmallStacksMatchUniformCost) {
  for (auto model : {PancakeCostModel::Unit, PancakeCostModel::Heavy}) {
    for (const auto& order : gen_pancake(6, 10, 12)) {
      const PancakePuzzle p(model, order);
      EXPECT_EQ(optimal_oracle(p).cost, testing::uniform_cost(p));
    }
  }
}

}  // namespace
}  // namespace beamkit
