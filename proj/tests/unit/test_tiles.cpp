#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "beamkit/domains/tiles.hpp"
#include "beamkit/oracle.hpp"
#include "beamkit/parse_error.hpp"
#include "corpus.hpp"

namespace beamkit {
namespace {

constexpr TileCostModel kModels[] = {TileCostModel::Unit, TileCostModel::Heavy, TileCostModel::Sqrt,
                                     TileCostModel::Inverse, TileCostModel::Reverse};

// Independent Manhattan sum, weighted by a caller-supplied cost.
template <class Weight>
double manhattan(const std::vector<int>& tiles, int side, Weight weight) {
  double total = 0;
  for (int cell = 0; cell < side * side; ++cell) {
    const int t = tiles[cell];
    if (t == 0) continue;
    total += (std::abs(cell / side - t / side) + std::abs(cell % side - t % side)) * weight(t);
  }
  return total;
}

TEST(TileCosts, PerModel) {
  EXPECT_EQ(tile_move_cost(TileCostModel::Unit, 7, 4), 1);
  EXPECT_EQ(tile_move_cost(TileCostModel::Heavy, 7, 4), 7);
  EXPECT_DOUBLE_EQ(tile_move_cost(TileCostModel::Sqrt, 9, 4), 3);
  EXPECT_EQ(tile_move_cost(TileCostModel::Inverse, 4, 4), 0.25);
  EXPECT_EQ(tile_move_cost(TileCostModel::Reverse, 1, 4), 15);
  EXPECT_EQ(tile_move_cost(TileCostModel::Reverse, 1, 3), 8);
  for (auto m : kModels) {
    for (int t = 1; t < 16; ++t) EXPECT_GT(tile_move_cost(m, t, 4), 0);
  }
}

TEST(TileSuccessors, EdgeCostIsMovedTilesCost) {
  // Blank in cell 5 next to tile 7 (cell 6, to the right) and 4 (cell 1, above).
  const std::vector<int> tiles{1, 4, 2, 3, 5, 0, 7, 6, 8, 9, 10, 11, 12, 13, 14, 15};
  const TilePuzzle heavy(TileCostModel::Heavy, tiles);
  const TilePuzzle inverse(TileCostModel::Inverse, tiles);
  const auto hs = heavy.successors(heavy.initial());
  const auto is = inverse.successors(inverse.initial());
  ASSERT_EQ(hs.size(), 4u);
  // Up, Left, Right, Down: tiles 4, 5, 7, 9.
  EXPECT_EQ(hs[0].cost, 4);
  EXPECT_EQ(hs[1].cost, 5);
  EXPECT_EQ(hs[2].cost, 7);
  EXPECT_EQ(hs[3].cost, 9);
  EXPECT_EQ(is[0].cost, 0.25);
  EXPECT_EQ(hs[0].state.blank, 1);
  EXPECT_EQ(hs[1].state.blank, 4);
  EXPECT_EQ(hs[2].state.blank, 6);
  EXPECT_EQ(hs[3].state.blank, 9);
}

TEST(TileSuccessors, CornerBlankHasTwo) {
  const TilePuzzle p(TileCostModel::Unit, std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  EXPECT_EQ(p.successors(p.initial()).size(), 2u);
  const TilePuzzle q(TileCostModel::Unit, std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 0});
  EXPECT_EQ(q.successors(q.initial()).size(), 2u);
}

TEST(TileHeuristic, GoalIsZeroUnderEveryModel) {
  for (auto m : kModels) {
    for (int side : {3, 4}) {
      std::vector<int> tiles(side * side);
      for (int i = 0; i < side * side; ++i) tiles[i] = i;
      const TilePuzzle p(m, tiles);
      EXPECT_TRUE(p.is_goal(p.initial()));
      EXPECT_EQ(p.h(p.initial()), 0);
      EXPECT_EQ(p.d(p.initial()), 0);
    }
  }
}

TEST(TileHeuristic, HandComputed) {
  // Blank walked 0 -> 1 -> 2 -> 5 from the goal: tiles 1, 2 and 5 are each one step out.
  const std::vector<int> tiles{1, 2, 5, 3, 4, 0, 6, 7, 8};
  const TilePuzzle heavy(TileCostModel::Heavy, tiles);
  EXPECT_EQ(heavy.h(heavy.initial()), 1 + 2 + 5);
  EXPECT_EQ(heavy.d(heavy.initial()), 3);
  const TilePuzzle reverse(TileCostModel::Reverse, tiles);
  EXPECT_EQ(reverse.h(reverse.initial()), 8 + 7 + 4);
}

TEST(TileHeuristicProperty, MatchesIndependentSumAndUnitEqualsD) {
  for (auto m : kModels) {
    for (int side : {3, 4}) {
      for (const auto& tiles : gen_tiles(side, 30, 9 + side)) {
        const TilePuzzle p(m, tiles);
        const auto s = p.initial();
        EXPECT_NEAR(p.h(s), manhattan(tiles, side, [&](int t) { return tile_move_cost(m, t, side); }), 1e-9);
        EXPECT_EQ(p.d(s), manhattan(tiles, side, [](int) { return 1.0; }));
        if (m == TileCostModel::Unit) {
          EXPECT_EQ(p.h(s), p.d(s));
        }
      }
    }
  }
}

// One move changes h by exactly the moved tile's cost times its change in
// Manhattan distance (+1 or -1), and every move can be undone at equal cost.
TEST(TileSuccessorProperty, DecompositionAndReversibility) {
  std::mt19937_64 rng(3);
  for (auto m : kModels) {
    const TilePuzzle p(m, testing::korf_instances()[2].tiles);
    auto s = p.initial();
    for (int step = 0; step < 400; ++step) {
      const auto succ = p.successors(s);
      for (const auto& e : succ) {
        const int tile = s.at(e.state.blank);
        const double delta = p.h(e.state) - p.h(s);
        EXPECT_NEAR(std::abs(delta), p.move_cost(tile), 1e-9);
        EXPECT_EQ(e.cost, p.move_cost(tile));
        bool back = false;
        for (const auto& r : p.successors(e.state)) back = back || (r.state == s && r.cost == e.cost);
        EXPECT_TRUE(back);
      }
      s = succ[rng() % succ.size()].state;
    }
  }
}

TEST(TileParse, GoalLine) {
  const auto inst = parse_korf_tiles("0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15\n");
  ASSERT_EQ(inst.size(), 1u);
  const TilePuzzle p(TileCostModel::Unit, inst[0].tiles);
  EXPECT_TRUE(p.is_goal(p.initial()));
  EXPECT_FALSE(inst[0].index.has_value());
}

TEST(TileParse, IndexedLinesAndComments) {
  const auto inst = parse_korf_tiles("# header\n\n7 1 0 2 3 4 5 6 8  # 8-puzzle\n12 1 2 0 3 4 5 6 7 8\n");
  ASSERT_EQ(inst.size(), 2u);
  EXPECT_FALSE(inst[0].index);
  EXPECT_EQ(inst[0].side, 3);
  EXPECT_EQ(inst[0].line, 3);
  EXPECT_EQ(inst[1].index, 12);
}

void expect_parse_error(const std::string& text, int line) {
  try {
    parse_korf_tiles(text);
    ADD_FAILURE() << "no error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
  }
}

TEST(TileParse, Errors) {
  expect_parse_error("0 1 2 3\n", 1);
  expect_parse_error("0 1 2 3 4 5 6 7 8\n0 1 2 3 4 5 6 x 8\n", 2);
  expect_parse_error("0 1 2 3 4 5 6 7 7\n", 1);
  expect_parse_error("0 1 2 3 4 5 6 7 9\n", 1);
  expect_parse_error("# c\n0 2 1 3 4 5 6 7 8\n", 2);  // odd permutation: unsolvable
  expect_parse_error("0 1 2 3 4 5 6 7 8\n0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15\n", 2);
}

TEST(TileParse, RoundTrip) {
  const std::string text = "1 14 13 15 7 11 12 9 5 6 0 2 1 4 8 10 3\n2 13 5 4 10 9 12 8 14 2 3 7 1 0 15 11 6\n";
  const auto first = parse_korf_tiles(text);
  const auto again = parse_korf_tiles(serialize_tiles(first));
  ASSERT_EQ(first.size(), again.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].tiles, again[i].tiles);
    EXPECT_EQ(first[i].index, again[i].index);
  }
  EXPECT_EQ(serialize_tiles(again), serialize_tiles(first));
}

TEST(TileSolvability, MatchesReachability) {
  // Swapping two tiles flips solvability.
  std::vector<int> tiles{0, 1, 2, 3, 4, 5, 6, 7, 8};
  EXPECT_TRUE(tiles_solvable(tiles, 3));
  std::swap(tiles[1], tiles[2]);
  EXPECT_FALSE(tiles_solvable(tiles, 3));
  for (const auto& t : gen_tiles(4, 50, 77)) EXPECT_TRUE(tiles_solvable(t, 4));
}

TEST(KorfInstances, ShippedSetParses) {
  const auto inst = testing::korf_instances();
  ASSERT_EQ(inst.size(), 20u);
  for (std::size_t i = 0; i < inst.size(); ++i) EXPECT_EQ(inst[i].index, static_cast<int>(i + 1));
}

// The two easiest shipped instances, solved exactly (42 and 45 moves).
TEST(KorfInstances, KnownOptimalCosts) {
  const auto inst = testing::korf_instances();
  EXPECT_EQ(optimal_oracle(TilePuzzle(TileCostModel::Unit, inst[15].tiles)).cost, 42);
  EXPECT_EQ(optimal_oracle(TilePuzzle(TileCostModel::Unit, inst[11].tiles)).cost, 45);
}

}  // namespace
}  // namespace beamkit
