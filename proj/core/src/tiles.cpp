#include "beamkit/domains/tiles.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "beamkit/parse_error.hpp"
#include "text_util.hpp"

namespace beamkit {

std::string_view to_string(TileCostModel model) {
  switch (model) {
    case TileCostModel::Unit: return "unit";
    case TileCostModel::Heavy: return "heavy";
    case TileCostModel::Sqrt: return "sqrt";
    case TileCostModel::Inverse: return "inverse";
    case TileCostModel::Reverse: return "reverse";
  }
  return "?";
}

TileCostModel parse_tile_cost_model(std::string_view text) {
  if (text == "unit") return TileCostModel::Unit;
  if (text == "heavy") return TileCostModel::Heavy;
  if (text == "sqrt") return TileCostModel::Sqrt;
  if (text == "inverse") return TileCostModel::Inverse;
  if (text == "reverse") return TileCostModel::Reverse;
  throw std::invalid_argument("unknown tile cost model: " + std::string(text));
}

double tile_move_cost(TileCostModel model, int tile, int side) {
  const double t = tile;
  switch (model) {
    case TileCostModel::Unit: return 1.0;
    case TileCostModel::Heavy: return t;
    case TileCostModel::Sqrt: return std::sqrt(t);
    case TileCostModel::Inverse: return 1.0 / t;
    case TileCostModel::Reverse: return static_cast<double>(side * side) - t;
  }
  return 1.0;
}

namespace {

void check_side(int side) {
  if (side != 3 && side != 4) throw std::invalid_argument("tile puzzle side must be 3 or 4");
}

// Empty string when `tiles` is a permutation of 0..n-1, else the reason.
std::string permutation_problem(std::span<const int> tiles, int cells) {
  if (static_cast<int>(tiles.size()) != cells) {
    return "expected " + std::to_string(cells) + " tiles, got " + std::to_string(tiles.size());
  }
  std::array<bool, 16> seen{};
  for (int t : tiles) {
    if (t < 0 || t >= cells) return "tile " + std::to_string(t) + " out of range";
    if (seen[t]) return "tile " + std::to_string(t) + " appears twice";
    seen[t] = true;
  }
  return {};
}

}  // namespace

TileBoard make_board(std::span<const int> tiles, int side) {
  check_side(side);
  if (auto problem = permutation_problem(tiles, side * side); !problem.empty()) {
    throw std::invalid_argument(problem);
  }
  TileBoard board;
  for (int cell = 0; cell < side * side; ++cell) {
    board.packed |= static_cast<std::uint64_t>(tiles[cell]) << (4 * cell);
    if (tiles[cell] == 0) board.blank = static_cast<std::uint8_t>(cell);
  }
  return board;
}

std::vector<int> board_tiles(const TileBoard& board, int side) {
  std::vector<int> tiles(side * side);
  for (int cell = 0; cell < side * side; ++cell) tiles[cell] = board.at(cell);
  return tiles;
}

bool tiles_solvable(std::span<const int> tiles, int side) {
  int inversions = 0;
  int blank_row = 0;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    if (tiles[i] == 0) {
      blank_row = static_cast<int>(i) / side;
      continue;
    }
    for (std::size_t j = i + 1; j < tiles.size(); ++j) {
      if (tiles[j] != 0 && tiles[j] < tiles[i]) ++inversions;
    }
  }
  // Odd widths: a vertical move shifts a tile past an even number of others.
  // Even widths: it shifts past an odd number and changes the blank's row.
  if (side % 2 == 1) return inversions % 2 == 0;
  return (inversions + blank_row) % 2 == 0;
}

TilePuzzle::TilePuzzle(int side, TileCostModel model, TileBoard start)
    : side_(side), cells_(side * side), model_(model), start_(start) {
  check_side(side);
  for (int cell = 0; cell < cells_; ++cell) goal_packed_ |= static_cast<std::uint64_t>(cell) << (4 * cell);
  for (int tile = 1; tile < cells_; ++tile) {
    move_cost_[tile] = tile_move_cost(model, tile, side);
    for (int cell = 0; cell < cells_; ++cell) {
      const int md = std::abs(cell / side - tile / side) + std::abs(cell % side - tile % side);
      distance_[tile][cell] = static_cast<std::uint8_t>(md);
      weighted_[tile][cell] = md * move_cost_[tile];
    }
  }
}

TilePuzzle::TilePuzzle(TileCostModel model, std::span<const int> tiles)
    : TilePuzzle(tiles.size() == 9 ? 3 : 4, model, make_board(tiles, tiles.size() == 9 ? 3 : 4)) {}

TileBoard TilePuzzle::goal() const {
  TileBoard board;
  board.packed = goal_packed_;
  board.blank = 0;
  return board;
}

void TilePuzzle::successors(const State& s, std::vector<Edge<State>>& out) const {
  const int blank = s.blank;
  const int row = blank / side_;
  const int col = blank % side_;
  auto slide = [&](int target) {
    const int tile = s.at(target);
    State next;
    next.packed = s.packed & ~(std::uint64_t{0xF} << (4 * target));
    next.packed |= static_cast<std::uint64_t>(tile) << (4 * blank);
    next.blank = static_cast<std::uint8_t>(target);
    out.push_back({next, move_cost_[tile]});
  };
  if (row > 0) slide(blank - side_);          // up
  if (col > 0) slide(blank - 1);              // left
  if (col < side_ - 1) slide(blank + 1);      // right
  if (row < side_ - 1) slide(blank + side_);  // down
}

std::vector<Edge<TileBoard>> TilePuzzle::successors(const State& s) const {
  std::vector<Edge<State>> out;
  successors(s, out);
  return out;
}

Cost TilePuzzle::h(const State& s) const {
  Cost total = 0;
  for (int cell = 0; cell < cells_; ++cell) {
    const int tile = s.at(cell);
    if (tile != 0) total += weighted_[tile][cell];
  }
  return total;
}

double TilePuzzle::d(const State& s) const {
  int total = 0;
  for (int cell = 0; cell < cells_; ++cell) {
    const int tile = s.at(cell);
    if (tile != 0) total += distance_[tile][cell];
  }
  return total;
}

std::string TilePuzzle::format(const State& s) const {
  std::string out;
  for (int cell = 0; cell < cells_; ++cell) {
    if (cell > 0) out += ' ';
    out += std::to_string(s.at(cell));
  }
  return out;
}

std::vector<TileInstance> parse_korf_tiles(std::string_view text) {
  std::vector<TileInstance> instances;
  for (const auto& line : text::content_lines(text)) {
    const auto tokens = text::tokens(line.content);
    std::vector<int> values;
    values.reserve(tokens.size());
    for (auto token : tokens) {
      auto value = text::to_integer(token);
      if (!value) throw ParseError(line.number, "malformed token '" + std::string(token) + "'");
      values.push_back(static_cast<int>(*value));
    }
    TileInstance instance;
    instance.line = line.number;
    if (values.size() == 10 || values.size() == 17) {
      instance.index = values.front();
      values.erase(values.begin());
    }
    if (values.size() == 9) {
      instance.side = 3;
    } else if (values.size() == 16) {
      instance.side = 4;
    } else {
      throw ParseError(line.number, "wrong count: expected 9 or 16 tiles, got " + std::to_string(values.size()));
    }
    if (!instances.empty() && instances.front().side != instance.side) {
      throw ParseError(line.number, "board size differs from the first instance");
    }
    if (auto problem = permutation_problem(values, instance.side * instance.side); !problem.empty()) {
      throw ParseError(line.number, problem);
    }
    if (!tiles_solvable(values, instance.side)) throw ParseError(line.number, "unsolvable parity");
    instance.tiles = std::move(values);
    instances.push_back(std::move(instance));
  }
  return instances;
}

std::string serialize_tiles(std::span<const TileInstance> instances) {
  std::ostringstream out;
  for (const auto& instance : instances) {
    if (instance.index) out << *instance.index << ' ';
    for (std::size_t i = 0; i < instance.tiles.size(); ++i) {
      if (i > 0) out << ' ';
      out << instance.tiles[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace beamkit
