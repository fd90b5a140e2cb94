#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "beamkit/search_types.hpp"

namespace beamkit {

/// Writes one JSON object per event:
/// {"level":..,"slot":..,"event":"selected","key":..,"g":..,"h":..,"f":..,"depth":..,"origin_slot":..}
/// Node fields are omitted for left-empty events.
class JsonlTraceWriter final : public TraceSink {
 public:
  explicit JsonlTraceWriter(std::ostream& out) : out_(out) {}
  void record(const TraceEvent& event) override;

 private:
  std::ostream& out_;
};

std::string trace_event_to_json(const TraceEvent& event);
TraceEvent trace_event_from_json(const std::string& line);
std::vector<TraceEvent> read_trace(std::istream& in);

}  // namespace beamkit
