#include "beamkit/search_types.hpp"

#include <string>

namespace beamkit {

std::string_view to_string(Ordering ordering) {
  return ordering == Ordering::CostGuided ? "cost-guided" : "distance-guided";
}

std::string_view to_string(Dedup dedup) {
  switch (dedup) {
    case Dedup::None: return "none";
    case Dedup::FullBeam: return "full";
    case Dedup::SlotAware: return "slot";
  }
  return "?";
}

Dedup parse_dedup(std::string_view text) {
  if (text == "none") return Dedup::None;
  if (text == "full") return Dedup::FullBeam;
  if (text == "slot") return Dedup::SlotAware;
  throw std::invalid_argument("dedup must be none, full or slot, got " + std::string(text));
}

std::string_view to_string(Termination termination) {
  switch (termination) {
    case Termination::SolutionFound: return "solution-found";
    case Termination::Exhausted: return "exhausted";
    case Termination::ResourceLimit: return "resource-limit";
  }
  return "?";
}

std::string_view to_string(TraceEventKind kind) {
  switch (kind) {
    case TraceEventKind::Selected: return "selected";
    case TraceEventKind::PrunedIncumbent: return "pruned-incumbent";
    case TraceEventKind::RejectedDuplicate: return "rejected-duplicate";
    case TraceEventKind::LeftEmpty: return "left-empty";
  }
  return "?";
}

}  // namespace beamkit
