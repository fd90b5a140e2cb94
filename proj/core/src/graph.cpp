#include "beamkit/domains/graph.hpp"

#include <cmath>
#include <unordered_map>

#include "beamkit/parse_error.hpp"
#include "text_util.hpp"

namespace beamkit {

namespace {

double parse_nonnegative(std::string_view token, int line, std::string_view what) {
  auto value = text::to_real(token);
  if (!value || !std::isfinite(*value)) {
    throw ParseError(line, "malformed " + std::string(what) + " '" + std::string(token) + "'");
  }
  if (*value < 0) throw ParseError(line, "negative " + std::string(what));
  return *value;
}

}  // namespace

ExplicitGraph ExplicitGraph::parse(std::string_view text) {
  ExplicitGraph graph;
  std::unordered_map<std::string, int> ids;
  struct PendingArc {
    int line;
    std::string src;
    std::string dst;
    double cost;
  };
  std::vector<PendingArc> pending;

  for (const auto& line : text::content_lines(text)) {
    const auto tokens = text::tokens(line.content);
    if (tokens[0] == "node") {
      if (tokens.size() < 2) throw ParseError(line.number, "node needs an id");
      Vertex v;
      v.name = std::string(tokens[1]);
      bool has_h = false;
      bool has_d = false;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        const auto tok = tokens[i];
        if (tok.starts_with("h=")) {
          v.h = parse_nonnegative(tok.substr(2), line.number, "h");
          has_h = true;
        } else if (tok.starts_with("d=")) {
          v.d = parse_nonnegative(tok.substr(2), line.number, "d");
          has_d = true;
        } else if (tok == "goal") {
          v.goal = true;
        } else if (tok == "start") {
          v.start = true;
        } else {
          throw ParseError(line.number, "unknown node attribute '" + std::string(tok) + "'");
        }
      }
      if (!has_h) throw ParseError(line.number, "node " + v.name + " lacks h=");
      if (!has_d) v.d = v.h;
      if (v.goal && (v.h != 0 || v.d != 0)) throw ParseError(line.number, "goal node " + v.name + " needs h = d = 0");
      if (ids.contains(v.name)) throw ParseError(line.number, "node " + v.name + " declared twice");
      if (v.start) {
        if (graph.start_ != -1) throw ParseError(line.number, "more than one start node");
        graph.start_ = static_cast<int>(graph.vertices_.size());
      }
      ids.emplace(v.name, static_cast<int>(graph.vertices_.size()));
      graph.vertices_.push_back(std::move(v));
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 4) throw ParseError(line.number, "edge needs <src> <dst> <cost>");
      pending.push_back({line.number, std::string(tokens[1]), std::string(tokens[2]),
                         parse_nonnegative(tokens[3], line.number, "cost")});
    } else {
      throw ParseError(line.number, "expected 'node' or 'edge', got '" + std::string(tokens[0]) + "'");
    }
  }

  if (graph.start_ == -1) throw ParseError(0, "missing start node");
  graph.arcs_.resize(graph.vertices_.size());
  for (const auto& arc : pending) {
    auto src = ids.find(arc.src);
    auto dst = ids.find(arc.dst);
    if (src == ids.end()) throw ParseError(arc.line, "unknown node " + arc.src);
    if (dst == ids.end()) throw ParseError(arc.line, "unknown node " + arc.dst);
    graph.arcs_[src->second].push_back({dst->second, arc.cost});
  }
  return graph;
}

int ExplicitGraph::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (vertices_[i].name == name) return i;
  }
  return -1;
}

void GraphDomain::successors(const State& s, std::vector<Edge<State>>& out) const {
  for (const auto& arc : graph_.arcs(s.id)) out.push_back({GraphVertex{arc.target}, arc.cost});
}

std::vector<Edge<GraphVertex>> GraphDomain::successors(const State& s) const {
  std::vector<Edge<State>> out;
  successors(s, out);
  return out;
}

GraphDomain graph_domain_from_spec(std::string_view text) { return GraphDomain(ExplicitGraph::parse(text)); }

}  // namespace beamkit
