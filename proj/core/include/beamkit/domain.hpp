#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "beamkit/search_node.hpp"

namespace beamkit {

template <class State>
struct Edge {
  State state;
  Cost cost = 0;
};

/// What every engine needs from a state space. `successors` appends to `out`
/// in a fixed, documented order; `key` is the 64-bit state key used in traces
/// and hashing (states themselves are the canonical encoding).
template <class D>
concept SearchDomain = requires(const D& domain, const typename D::State& s,
                                std::vector<Edge<typename D::State>>& out) {
  typename D::State;
  requires std::equality_comparable<typename D::State>;
  { s.hash() } -> std::convertible_to<std::uint64_t>;
  { domain.initial() } -> std::convertible_to<typename D::State>;
  domain.successors(s, out);
  { domain.is_goal(s) } -> std::convertible_to<bool>;
  { domain.h(s) } -> std::convertible_to<Cost>;
  { domain.d(s) } -> std::convertible_to<double>;
  { domain.key(s) } -> std::convertible_to<std::uint64_t>;
  { domain.format(s) } -> std::convertible_to<std::string>;
};

/// splitmix64 finalizer; domains use it to spread packed encodings.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace beamkit
