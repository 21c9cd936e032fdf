#include "pvds/events.hpp"

#include <algorithm>

namespace pvds {

std::string to_string(RuleId id) {
  switch (id) {
    case RuleId::Force:
      return "force";
    case RuleId::KernelBound:
      return "kernel-bound";
    default:
      return "rule" + std::to_string(static_cast<int>(id));
  }
}

void EventRecorder::remove_edge(Vertex u, Vertex v) {
  instance_.remove_edge(u, v);
  event_.removed_edges.emplace_back(std::min(u, v), std::max(u, v));
}

void EventRecorder::remove_vertex(Vertex v) {
  instance_.remove_vertex(v);
  auto it = std::lower_bound(event_.removed_vertices.begin(), event_.removed_vertices.end(), v);
  event_.removed_vertices.insert(it, v);
}

void EventRecorder::change_demand(Vertex v, int delta) {
  const int before = instance_.demand(v);
  const int after = std::max(0, before + delta);
  if (after == before) return;
  instance_.set_demand(v, after);
  int &slot = event_.demand_deltas[v];
  slot += after - before;
  if (slot == 0) event_.demand_deltas.erase(v);
}

void EventRecorder::color_blue(Vertex v) {
  if (instance_.forbidden(v)) return;
  instance_.set_forbidden(v);
  auto it = std::lower_bound(event_.newly_blue.begin(), event_.newly_blue.end(), v);
  event_.newly_blue.insert(it, v);
}

void EventRecorder::change_budget(int delta) {
  instance_.set_budget(instance_.budget() + delta);
  event_.budget_delta += delta;
}

void EventRecorder::decide(Status s) {
  instance_.set_status(s);
  event_.decided = s;
}

void replay(Instance &instance, const ReductionEvent &event) {
  for (const auto &[v, delta] : event.demand_deltas) instance.set_demand(v, instance.demand(v) + delta);
  for (Vertex v : event.newly_blue) instance.set_forbidden(v);
  for (const auto &[u, v] : event.removed_edges) instance.remove_edge(u, v);
  for (Vertex v : event.removed_vertices) instance.remove_vertex(v);
  instance.set_budget(instance.budget() + event.budget_delta);
  if (event.decided) instance.set_status(*event.decided);
}

}  // namespace pvds
