#pragma once

#include <string>

#include "json.hpp"
#include "takegrant/bridge.hpp"
#include "takegrant/graph.hpp"

namespace takegrant {

/// `{"exists", "direction", "passes", "path", "frontier_trace"}` in that key
/// order, vertex names instead of ids.
inline nlohmann::ordered_json report_to_json(const ProtectionGraph& g,
                                             const SearchReport& report) {
  nlohmann::ordered_json j;
  j["exists"] = report.exists;
  j["direction"] = to_string(report.direction);
  j["passes"] = report.passes;
  if (report.path) {
    auto names = nlohmann::ordered_json::array();
    for (VertexId v : report.path->vertices) names.push_back(g.name(v));
    j["path"] = std::move(names);
  } else {
    j["path"] = nullptr;
  }
  auto trace = nlohmann::ordered_json::array();
  for (const auto& step : report.frontier_trace) {
    auto names = nlohmann::ordered_json::array();
    for (VertexId v : step.added) names.push_back(g.name(v));
    trace.push_back(nlohmann::ordered_json::array({step.pass, std::move(names)}));
  }
  j["frontier_trace"] = std::move(trace);
  return j;
}

/// Compact single-line rendering terminated by LF.
inline std::string report_json_line(const ProtectionGraph& g,
                                    const SearchReport& report) {
  return report_to_json(g, report).dump() + "\n";
}

}  // namespace takegrant
