#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <string_view>

namespace beamkit {

/// Action costs, g, h and f. Compared exactly; every engine sums costs in a
/// fixed order so results are bit-reproducible.
using Cost = double;

inline constexpr Cost kInfinity = std::numeric_limits<Cost>::infinity();
inline constexpr std::int64_t kNoParent = -1;

enum class Ordering {
  CostGuided,      // (f, h, seq)
  DistanceGuided,  // (depth + d, f, g, seq)
};

std::string_view to_string(Ordering ordering);

/// One reached state. `f` holds the pathmax-adjusted value, `width` is the
/// beam slot the node was selected into (0 while it is still a candidate) and
/// `parent` indexes the engine's trail of selected nodes.
template <class State>
struct SearchNode {
  State state{};
  Cost g = 0;
  Cost h = 0;
  double d = 0;
  Cost f = 0;
  std::uint32_t depth = 0;
  std::uint32_t origin_slot = 1;
  std::uint32_t width = 0;
  std::uint64_t seq = 0;
  std::int64_t parent = kNoParent;
};

/// f(child) = max(g + h, f(parent)), keeping f nondecreasing along paths.
constexpr Cost pathmax_adjust(Cost parent_f, Cost child_g, Cost child_h) {
  return std::max(child_g + child_h, parent_f);
}

/// Lexicographic selection key; lower is better. CostGuided leaves
/// `tertiary` at zero.
struct OrderingKey {
  double primary = 0;
  double secondary = 0;
  double tertiary = 0;
  std::uint64_t seq = 0;

  friend auto operator<=>(const OrderingKey&, const OrderingKey&) = default;
};

template <class State>
OrderingKey ordering_key(const SearchNode<State>& node, Ordering ordering) {
  if (ordering == Ordering::CostGuided) {
    return {node.f, node.h, 0.0, node.seq};
  }
  return {static_cast<double>(node.depth) + node.d, node.f, node.g, node.seq};
}

/// Strict "a is selected before b". Same result as comparing ordering_key,
/// without building the keys.
template <class State>
bool selected_before(const SearchNode<State>& a, const SearchNode<State>& b,
                     Ordering ordering) {
  if (ordering == Ordering::CostGuided) {
    if (a.f != b.f) return a.f < b.f;
    if (a.h != b.h) return a.h < b.h;
    return a.seq < b.seq;
  }
  const double la = static_cast<double>(a.depth) + a.d;
  const double lb = static_cast<double>(b.depth) + b.d;
  if (la != lb) return la < lb;
  if (a.f != b.f) return a.f < b.f;
  if (a.g != b.g) return a.g < b.g;
  return a.seq < b.seq;
}

}  // namespace beamkit
