#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "beamkit/domain.hpp"

namespace beamkit {

/// Hand-built search space given as text:
///
///   node <id> h=<float> [d=<float>] [goal] [start]
///   edge <src> <dst> <cost>
///
/// d defaults to h. Successors follow edge order in the file.
class ExplicitGraph {
 public:
  struct Vertex {
    std::string name;
    double h = 0;
    double d = 0;
    bool goal = false;
    bool start = false;
  };
  struct Arc {
    int target;
    double cost;
  };

  /// Throws ParseError on malformed lines, unknown or repeated ids, negative
  /// numbers, a goal with nonzero h or d, or anything but exactly one start.
  static ExplicitGraph parse(std::string_view text);

  int start() const { return start_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const Vertex& vertex(int id) const { return vertices_[id]; }
  const std::vector<Arc>& arcs(int id) const { return arcs_[id]; }
  /// Vertex index for a name, or -1.
  int find(std::string_view name) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::vector<Arc>> arcs_;
  int start_ = -1;
};

struct GraphVertex {
  int id = 0;
  std::uint64_t hash() const { return mix64(static_cast<std::uint64_t>(id)); }
  friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

class GraphDomain {
 public:
  using State = GraphVertex;

  explicit GraphDomain(ExplicitGraph graph) : graph_(std::move(graph)) {}

  State initial() const { return {graph_.start()}; }
  void successors(const State& s, std::vector<Edge<State>>& out) const;
  std::vector<Edge<State>> successors(const State& s) const;
  bool is_goal(const State& s) const { return graph_.vertex(s.id).goal; }
  Cost h(const State& s) const { return graph_.vertex(s.id).h; }
  double d(const State& s) const { return graph_.vertex(s.id).d; }
  std::uint64_t key(const State& s) const { return static_cast<std::uint64_t>(s.id); }
  std::string format(const State& s) const { return graph_.vertex(s.id).name; }

  const ExplicitGraph& graph() const { return graph_; }

 private:
  ExplicitGraph graph_;
};

GraphDomain graph_domain_from_spec(std::string_view text);

}  // namespace beamkit
