#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pvds/instance.hpp"

namespace pvds {

// Rules 1..13 keep their numeric value.
enum class RuleId : int {
  Force = 0,
  R1 = 1, R2, R3, R4, R5, R6, R7, R8, R9, R10, R11, R12, R13,
  KernelBound = 14,
};

inline constexpr int kRuleIdCount = 15;

std::string to_string(RuleId id);
inline RuleId rule_from_number(int r) { return static_cast<RuleId>(r); }

// A replayable record of one rule firing. demand_deltas hold the change that
// was actually applied (after clamping at zero), so replay never clamps.
struct ReductionEvent {
  RuleId rule = RuleId::Force;
  VertexSet removed_vertices;
  std::vector<std::pair<Vertex, Vertex>> removed_edges;
  std::map<Vertex, int> demand_deltas;
  int budget_delta = 0;
  VertexSet newly_blue;
  std::optional<Status> decided;

  bool empty() const {
    return removed_vertices.empty() && removed_edges.empty() && demand_deltas.empty() &&
           budget_delta == 0 && newly_blue.empty() && !decided;
  }
};

// Applies mutations to an instance while recording them into an event.
class EventRecorder {
 public:
  EventRecorder(Instance &instance, RuleId rule) : instance_(instance) { event_.rule = rule; }

  void remove_edge(Vertex u, Vertex v);
  void remove_vertex(Vertex v);
  // Adds delta to demand(v), clamping at zero; records the applied change.
  void change_demand(Vertex v, int delta);
  void color_blue(Vertex v);
  void change_budget(int delta);
  void decide(Status s);

  const ReductionEvent &event() const { return event_; }
  ReductionEvent take() { return std::move(event_); }

 private:
  Instance &instance_;
  ReductionEvent event_;
};

// Order: demand changes, blue coloring, edge deletions, vertex deletions,
// budget, status.
void replay(Instance &instance, const ReductionEvent &event);

}  // namespace pvds
