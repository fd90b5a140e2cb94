#include "beamkit/trace.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace beamkit {

namespace {

TraceEventKind kind_from_string(const std::string& text) {
  for (auto kind : {TraceEventKind::Selected, TraceEventKind::PrunedIncumbent, TraceEventKind::RejectedDuplicate,
                    TraceEventKind::LeftEmpty}) {
    if (to_string(kind) == text) return kind;
  }
  throw std::invalid_argument("unknown trace event '" + text + "'");
}

}  // namespace

std::string trace_event_to_json(const TraceEvent& event) {
  nlohmann::ordered_json j;
  j["level"] = event.level;
  j["slot"] = event.slot;
  j["event"] = std::string(to_string(event.kind));
  if (event.kind != TraceEventKind::LeftEmpty) {
    j["key"] = event.key;
    j["g"] = event.g;
    j["h"] = event.h;
    j["f"] = event.f;
    j["depth"] = event.depth;
    j["origin_slot"] = event.origin_slot;
  }
  return j.dump();
}

TraceEvent trace_event_from_json(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  TraceEvent event;
  event.level = j.at("level").get<std::uint32_t>();
  event.slot = j.at("slot").get<std::uint32_t>();
  event.kind = kind_from_string(j.at("event").get<std::string>());
  if (event.kind != TraceEventKind::LeftEmpty) {
    event.key = j.at("key").get<std::uint64_t>();
    event.g = j.at("g").get<double>();
    event.h = j.at("h").get<double>();
    event.f = j.at("f").get<double>();
    event.depth = j.at("depth").get<std::uint32_t>();
    event.origin_slot = j.at("origin_slot").get<std::uint32_t>();
  }
  return event;
}

void JsonlTraceWriter::record(const TraceEvent& event) { out_ << trace_event_to_json(event) << '\n'; }

std::vector<TraceEvent> read_trace(std::istream& in) {
  std::vector<TraceEvent> events;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) events.push_back(trace_event_from_json(line));
  }
  return events;
}

}  // namespace beamkit
