#include "beamkit/domains/pancake.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "beamkit/parse_error.hpp"
#include "text_util.hpp"

namespace beamkit {

std::string_view to_string(PancakeCostModel model) {
  return model == PancakeCostModel::Unit ? "unit" : "heavy";
}

PancakeCostModel parse_pancake_cost_model(std::string_view text) {
  if (text == "unit") return PancakeCostModel::Unit;
  if (text == "heavy") return PancakeCostModel::Heavy;
  throw std::invalid_argument("pancake cost model must be unit or heavy, got " + std::string(text));
}

std::uint64_t PancakeStack::hash() const {
  std::uint64_t h = size;
  int i = 0;
  for (; i + 8 <= size; i += 8) {
    std::uint64_t word = 0;
    for (int b = 0; b < 8; ++b) word |= static_cast<std::uint64_t>(cakes[i + b]) << (8 * b);
    h = mix64(h ^ word);
  }
  std::uint64_t tail = 0;
  for (int b = 0; i < size; ++i, ++b) tail |= static_cast<std::uint64_t>(cakes[i]) << (8 * b);
  return mix64(h ^ tail);
}

namespace {

std::string permutation_problem(std::span<const int> order) {
  const int n = static_cast<int>(order.size());
  if (n < 2) return "need at least 2 pancakes";
  if (n > kMaxPancakes) return "at most " + std::to_string(kMaxPancakes) + " pancakes supported";
  std::vector<bool> seen(n + 1, false);
  for (int p : order) {
    if (p < 1 || p > n) return "pancake " + std::to_string(p) + " out of range 1.." + std::to_string(n);
    if (seen[p]) return "pancake " + std::to_string(p) + " appears twice";
    seen[p] = true;
  }
  return {};
}

}  // namespace

PancakeStack make_stack(std::span<const int> order) {
  if (auto problem = permutation_problem(order); !problem.empty()) throw std::invalid_argument(problem);
  PancakeStack stack;
  stack.size = static_cast<std::uint8_t>(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) stack.cakes[i] = static_cast<std::uint8_t>(order[i]);
  return stack;
}

std::vector<int> stack_order(const PancakeStack& stack) {
  return {stack.cakes.begin(), stack.cakes.begin() + stack.size};
}

int gap_h(std::span<const std::uint8_t> stack) {
  const int n = static_cast<int>(stack.size());
  int gaps = 0;
  for (int i = 0; i < n; ++i) {
    const int below = i + 1 < n ? stack[i + 1] : n + 1;
    if (std::abs(stack[i] - below) > 1) ++gaps;
  }
  return gaps;
}

double heavy_gap_h(std::span<const std::uint8_t> stack) {
  const int n = static_cast<int>(stack.size());
  double total = 0;
  for (int i = 0; i < n; ++i) {
    const int below = i + 1 < n ? stack[i + 1] : n + 1;
    if (std::abs(stack[i] - below) > 1) total += std::min<int>(stack[i], below);
  }
  return total;
}

double pancake_flip_cost(std::span<const std::uint8_t> stack, int k, PancakeCostModel model) {
  if (model == PancakeCostModel::Unit) return 1.0;
  return stack[k - 1];
}

PancakePuzzle::PancakePuzzle(PancakeCostModel model, PancakeStack start) : model_(model), start_(start) {}

PancakePuzzle::PancakePuzzle(PancakeCostModel model, std::span<const int> order)
    : PancakePuzzle(model, make_stack(order)) {}

void PancakePuzzle::successors(const State& s, std::vector<Edge<State>>& out) const {
  for (int k = 2; k <= s.size; ++k) {
    State next = s;
    std::reverse(next.cakes.begin(), next.cakes.begin() + k);
    out.push_back({next, pancake_flip_cost(s.view(), k, model_)});
  }
}

std::vector<Edge<PancakeStack>> PancakePuzzle::successors(const State& s) const {
  std::vector<Edge<State>> out;
  successors(s, out);
  return out;
}

bool PancakePuzzle::is_goal(const State& s) const {
  for (int i = 0; i < s.size; ++i) {
    if (s.cakes[i] != i + 1) return false;
  }
  return true;
}

Cost PancakePuzzle::h(const State& s) const {
  return model_ == PancakeCostModel::Unit ? gap_h(s.view()) : heavy_gap_h(s.view());
}

std::string PancakePuzzle::format(const State& s) const {
  std::string out;
  for (int i = 0; i < s.size; ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(s.cakes[i]);
  }
  return out;
}

std::vector<std::vector<int>> parse_pancakes(std::string_view text) {
  std::vector<std::vector<int>> stacks;
  for (const auto& line : text::content_lines(text)) {
    std::vector<int> order;
    for (auto token : text::tokens(line.content)) {
      auto value = text::to_integer(token);
      if (!value) throw ParseError(line.number, "malformed token '" + std::string(token) + "'");
      order.push_back(static_cast<int>(*value));
    }
    if (auto problem = permutation_problem(order); !problem.empty()) throw ParseError(line.number, problem);
    stacks.push_back(std::move(order));
  }
  return stacks;
}

std::string serialize_pancakes(std::span<const std::vector<int>> stacks) {
  std::ostringstream out;
  for (const auto& order : stacks) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0) out << ' ';
      out << order[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace beamkit
