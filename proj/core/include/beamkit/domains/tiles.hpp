#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beamkit/domain.hpp"

namespace beamkit {

enum class TileCostModel { Unit, Heavy, Sqrt, Inverse, Reverse };

std::string_view to_string(TileCostModel model);
TileCostModel parse_tile_cost_model(std::string_view text);

/// Cost of moving tile `tile` (1..side*side-1). Reverse is side*side - t.
double tile_move_cost(TileCostModel model, int tile, int side);

/// Board packed four bits per cell, cell 0 in the low nibble. Goal is
/// 0 1 2 ... (blank in the top-left corner).
struct TileBoard {
  std::uint64_t packed = 0;
  std::uint8_t blank = 0;

  int at(int cell) const { return static_cast<int>((packed >> (4 * cell)) & 0xF); }
  std::uint64_t hash() const { return mix64(packed); }
  friend bool operator==(const TileBoard& a, const TileBoard& b) { return a.packed == b.packed; }
};

/// Throws std::invalid_argument unless `tiles` is a permutation of
/// 0..side*side-1 for side 3 or 4.
TileBoard make_board(std::span<const int> tiles, int side);
std::vector<int> board_tiles(const TileBoard& board, int side);
bool tiles_solvable(std::span<const int> tiles, int side);

/// Sliding-tile puzzle (8- or 15-puzzle) under one cost model. h is the
/// Manhattan distance of each tile weighted by its move cost; d is the plain
/// Manhattan distance. Successors move the blank Up, Left, Right, Down.
class TilePuzzle {
 public:
  using State = TileBoard;

  TilePuzzle(int side, TileCostModel model, TileBoard start);
  TilePuzzle(TileCostModel model, std::span<const int> tiles);

  State initial() const { return start_; }
  void successors(const State& s, std::vector<Edge<State>>& out) const;
  std::vector<Edge<State>> successors(const State& s) const;
  bool is_goal(const State& s) const { return s.packed == goal_packed_; }
  Cost h(const State& s) const;
  double d(const State& s) const;
  std::uint64_t key(const State& s) const { return s.packed; }
  std::string format(const State& s) const;

  int side() const { return side_; }
  TileCostModel model() const { return model_; }
  double move_cost(int tile) const { return move_cost_[tile]; }
  State goal() const;

 private:
  int side_;
  int cells_;
  TileCostModel model_;
  TileBoard start_;
  std::uint64_t goal_packed_ = 0;
  std::array<double, 16> move_cost_{};
  std::array<std::array<std::uint8_t, 16>, 16> distance_{};  // [tile][cell]
  std::array<std::array<double, 16>, 16> weighted_{};        // [tile][cell]
};

/// One parsed instance: the tiles in cell order, the board side, the source
/// line and the optional leading index token.
struct TileInstance {
  std::vector<int> tiles;
  int side = 4;
  int line = 0;
  std::optional<int> index;
};

/// Parses one instance per line: 9 or 16 integers, optionally preceded by an
/// index. `#` starts a comment. Throws ParseError (with the line number) on a
/// malformed token, wrong count, repeated tile or unsolvable parity.
std::vector<TileInstance> parse_korf_tiles(std::string_view text);
std::string serialize_tiles(std::span<const TileInstance> instances);

}  // namespace beamkit
