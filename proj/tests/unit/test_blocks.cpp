#include <gtest/gtest.h>

#include <set>

#include "beamkit/domains/blocks.hpp"
#include "beamkit/domains/generators.hpp"
#include "beamkit/oracle.hpp"
#include "beamkit/parse_error.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

namespace beamkit {
namespace {

TEST(BlocksHeuristic, GoalIsZero) {
  const auto goal = make_blocks_state(single_tower(4));
  for (auto m : {BlocksModel::Direct, BlocksModel::Deep}) {
    const BlocksWorld w(m, goal, goal);
    EXPECT_TRUE(w.is_goal(w.initial()));
    EXPECT_EQ(w.h(w.initial()), 0);
    EXPECT_EQ(w.d(w.initial()), 0);
  }
}

// A on B on C versus C on B on A (A=0, B=1, C=2): every chain is wrong.
TEST(BlocksHeuristic, InvertedTower) {
  const auto start = make_blocks_state({{2, 1, 0}});
  const auto goal = make_blocks_state({{0, 1, 2}});
  EXPECT_EQ(misplaced_blocks(start, goal), 3);
  EXPECT_EQ(BlocksWorld(BlocksModel::Direct, start, goal).h(start), 3);
  EXPECT_EQ(BlocksWorld(BlocksModel::Deep, start, goal).h(start), 6);
  EXPECT_EQ(optimal_oracle(BlocksWorld(BlocksModel::Direct, start, goal)).cost, 3);
}

TEST(BlocksHeuristic, CorrectChainBelowWrongBlock) {
  // 0 on table and 1 on 0 are right; 2 should sit on 1 but is on the table.
  const auto start = make_blocks_state({{0, 1}, {2}});
  const auto goal = make_blocks_state({{0, 1, 2}});
  EXPECT_EQ(misplaced_blocks(start, goal), 1);
  // 1 on 2 is wrong, so 0 resting on 1 is wrong too even if 0's own support is right.
  EXPECT_EQ(misplaced_blocks(make_blocks_state({{2, 1, 0}}), make_blocks_state({{2, 0, 1}})), 2);
}

TEST(BlocksSuccessors, DirectMoves) {
  const auto s = make_blocks_state({{0, 1}, {2}});
  const BlocksWorld w(BlocksModel::Direct, s, make_blocks_state(single_tower(3)));
  const auto succ = w.successors(s);
  // Tops are 1 and 2: 1 -> table, 1 -> 2, 2 -> 1 (2 is already on the table).
  ASSERT_EQ(succ.size(), 3u);
  EXPECT_EQ(blocks_stacks(succ[0].state), (Stacks{{0}, {1}, {2}}));
  EXPECT_EQ(blocks_stacks(succ[1].state), (Stacks{{0}, {2, 1}}));
  EXPECT_EQ(blocks_stacks(succ[2].state), (Stacks{{0, 1, 2}}));
  for (const auto& e : succ) {
    EXPECT_EQ(e.cost, 1);
    EXPECT_TRUE(blocks_valid(e.state));
  }
}

TEST(BlocksSuccessors, DeepPickupThenPutdown) {
  const auto s = make_blocks_state({{0, 1}, {2}});
  const BlocksWorld w(BlocksModel::Deep, s, make_blocks_state(single_tower(3)));
  const auto picks = w.successors(s);
  ASSERT_EQ(picks.size(), 2u);
  EXPECT_EQ(picks[0].state.holding, 1);
  EXPECT_EQ(w.h(picks[0].state), 2 * misplaced_blocks(picks[0].state, w.goal()) - 1);
  const auto puts = w.successors(picks[0].state);
  // Table, then onto each top (0 and 2).
  ASSERT_EQ(puts.size(), 3u);
  for (const auto& e : puts) EXPECT_EQ(e.state.holding, BlocksState::kNone);
  EXPECT_EQ(blocks_stacks(puts[0].state), (Stacks{{0}, {1}, {2}}));
}

// Deep splits each direct move into pick-up and put-down, so optimal deep
// cost is exactly twice optimal direct cost between hand-empty states.
TEST(BlocksOracle, DeepCostsTwiceDirect) {
  for (const auto& inst : gen_blocks(5, 12, 21)) {
    const auto s = make_blocks_state(inst.initial);
    const auto g = make_blocks_state(inst.goal);
    const auto direct = testing::uniform_cost(BlocksWorld(BlocksModel::Direct, s, g));
    const auto deep = testing::uniform_cost(BlocksWorld(BlocksModel::Deep, s, g));
    EXPECT_EQ(deep, 2 * direct);
    EXPECT_EQ(optimal_oracle(BlocksWorld(BlocksModel::Direct, s, g)).cost, direct);
  }
}

TEST(BlocksValidation, RejectsBadInput) {
  EXPECT_THROW(make_blocks_state({{0, 0}}), std::invalid_argument);
  EXPECT_THROW(make_blocks_state({{0, 2}}), std::invalid_argument);
  EXPECT_THROW(BlocksWorld(BlocksModel::Direct, make_blocks_state({{0, 1}}), make_blocks_state({{0, 1, 2}})),
               std::invalid_argument);
  EXPECT_THROW(parse_blocks_model("shallow"), std::invalid_argument);
}

TEST(BlocksParse, FormatsAndDefaults) {
  const auto inst = parse_blocks("# c\n1 0 | 2\n2 | 0 1 => 0 | 1 2\n");
  ASSERT_EQ(inst.size(), 2u);
  EXPECT_EQ(inst[0].initial, (Stacks{{1, 0}, {2}}));
  EXPECT_EQ(inst[0].goal, single_tower(3));
  EXPECT_EQ(inst[1].goal, (Stacks{{0}, {1, 2}}));
  EXPECT_EQ(format_stacks({{1, 0}, {2}}), "1 0 | 2");
}

TEST(BlocksParse, Errors) {
  auto line_of = [](const std::string& text) {
    try {
      parse_blocks(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("0 1\n0 0\n"), 2);
  EXPECT_EQ(line_of("0 | | 1\n"), 1);
  EXPECT_EQ(line_of("0 x\n"), 1);
  EXPECT_EQ(line_of("0 1 => 0 1 2\n"), 1);
}

// serialize(parse(x)) is x in canonical form (stacks ordered by bottom block).
TEST(BlocksParse, RoundTripIsCanonical) {
  const auto inst = parse_blocks("2 | 1 0 => 1 2 | 0\n");
  const auto text = serialize_blocks(inst);
  EXPECT_EQ(text, "1 0 | 2 => 0 | 1 2\n");
  EXPECT_EQ(serialize_blocks(parse_blocks(text)), text);
  for (const auto& g : gen_blocks(7, 20, 4)) {
    const std::vector<BlocksInstance> one{g};
    const auto t = serialize_blocks(one);
    EXPECT_EQ(serialize_blocks(parse_blocks(t)), t);
  }
}

TEST(BlocksState, CanonicalStacksIgnoreListingOrder) {
  EXPECT_TRUE(make_blocks_state({{2}, {0, 1}}) == make_blocks_state({{0, 1}, {2}}));
  EXPECT_EQ(make_blocks_state({{2}, {0, 1}}).hash(), make_blocks_state({{0, 1}, {2}}).hash());
}

}  // namespace
}  // namespace beamkit
