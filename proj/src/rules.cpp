#include <algorithm>
#include <map>

#include "pvds/rules.hpp"

namespace pvds {

namespace {

bool closed_contains(const Instance &inst, Vertex a, Vertex x) { return x == a || inst.adjacent(a, x); }

// N(v) subset of N[a].
bool open_within_closed(const Instance &inst, Vertex v, Vertex a) {
  for (Vertex x : inst.neighbors(v))
    if (!closed_contains(inst, a, x)) return false;
  return true;
}

// N_h[u] (u itself included) subset of N[a].
bool high_closed_within_closed(const Instance &inst, Vertex u, Vertex a) {
  if (!closed_contains(inst, a, u)) return false;
  for (Vertex x : inst.neighbors(u))
    if (inst.demand(x) >= 1 && !closed_contains(inst, a, x)) return false;
  return true;
}

VertexSet copy(std::span<const Vertex> s) { return VertexSet(s.begin(), s.end()); }

ReductionEvent single_edge(Instance &inst, RuleId rule, Vertex u, Vertex v) {
  EventRecorder rec(inst, rule);
  rec.remove_edge(u, v);
  return rec.take();
}

ReductionEvent single_vertex(Instance &inst, RuleId rule, Vertex v) {
  EventRecorder rec(inst, rule);
  rec.remove_vertex(v);
  return rec.take();
}

ReductionEvent forced(Instance &inst, RuleId rule, Vertex v) {
  ReductionEvent e = force_into_solution(inst, v);
  e.rule = rule;
  return e;
}

bool closed_instance(const Instance &inst) { return inst.status() == Status::DecidedNo; }

}  // namespace

std::vector<ReductionEvent> rule1(Instance &instance) {
  std::vector<ReductionEvent> events;
  if (closed_instance(instance)) return events;
  for (Vertex u : instance.vertices()) {
    if (instance.demand(u) != 0) continue;
    for (Vertex v : copy(instance.neighbors(u)))
      if (u < v && instance.demand(v) == 0) events.push_back(single_edge(instance, RuleId::R1, u, v));
  }
  return events;
}

std::vector<ReductionEvent> rule2(Instance &instance) {
  std::vector<ReductionEvent> events;
  if (closed_instance(instance)) return events;
  for (Vertex v : instance.vertices())
    if (instance.degree(v) == 0 && instance.demand(v) == 0) events.push_back(single_vertex(instance, RuleId::R2, v));
  return events;
}

std::vector<ReductionEvent> rule3(Instance &instance) {
  std::vector<ReductionEvent> events;
  while (!closed_instance(instance)) {
    Vertex hit = -1;
    for (Vertex v : instance.vertices()) {
      const int d = instance.demand(v);
      if (d > instance.budget() || d > instance.degree(v)) {
        hit = v;
        break;
      }
    }
    if (hit < 0) break;
    events.push_back(forced(instance, RuleId::R3, hit));
  }
  return events;
}

std::vector<ReductionEvent> rule4(Instance &instance) {
  std::vector<ReductionEvent> events;
  if (closed_instance(instance)) return events;
  for (Vertex v : instance.vertices()) {
    if (instance.demand(v) != 0) continue;
    bool changed = true;
    while (changed && instance.degree(v) > 0) {
      changed = false;
      // Any witness a lies in N[x] for the first neighbor x of v.
      const Vertex x = instance.neighbors(v).front();
      VertexSet witnesses = copy(instance.neighbors(x));
      witnesses.insert(std::upper_bound(witnesses.begin(), witnesses.end(), x), x);
      for (Vertex a : witnesses) {
        if (a == v) continue;
        // Replacing v by a needs a to be selectable, unless v never is.
        if (instance.forbidden(a) && !instance.forbidden(v)) continue;
        if (!open_within_closed(instance, v, a)) continue;
        EventRecorder rec(instance, RuleId::R4);
        for (Vertex b : copy(instance.neighbors(v)))
          if (instance.demand(b) == 1) rec.remove_edge(v, b);
        if (instance.adjacent(v, a)) rec.remove_edge(v, a);
        if (!rec.event().empty()) {
          events.push_back(rec.take());
          changed = true;
          break;
        }
      }
    }
  }
  return events;
}

std::vector<ReductionEvent> rule5(Instance &instance) {
  std::vector<ReductionEvent> events;
  bool fired = true;
  while (fired && !closed_instance(instance)) {
    fired = false;
    for (Vertex v : instance.vertices()) {
      if (instance.demand(v) != 1) continue;
      for (Vertex a : copy(instance.neighbors(v))) {
        if (instance.forbidden(a)) continue;
        bool ok = instance.demand(v) <= 1 && high_closed_within_closed(instance, v, a);
        for (Vertex u : instance.neighbors(v)) {
          if (!ok) break;
          if (u == a) continue;
          ok = instance.demand(u) <= 1 && high_closed_within_closed(instance, u, a);
        }
        if (!ok) continue;
        events.push_back(forced(instance, RuleId::R5, a));
        fired = true;
        break;
      }
      if (fired) break;
    }
  }
  return events;
}

std::vector<ReductionEvent> rule9(Instance &instance) {
  std::vector<ReductionEvent> events;
  if (closed_instance(instance)) return events;
  for (Vertex v : instance.vertices()) {
    if (instance.forbidden(v) || instance.demand(v) > 1) continue;
    // v is in N_h[v], so any witness w is a neighbor of v.
    for (Vertex w : instance.neighbors(v)) {
      if (instance.forbidden(w)) continue;
      bool covered = true;
      for (Vertex h : instance.neighbors(v))
        if (instance.demand(h) >= 1 && !instance.adjacent(w, h)) {
          covered = false;
          break;
        }
      if (!covered) continue;
      VertexSet heavy;
      for (Vertex z : instance.neighbors(v))
        if (z != w && instance.demand(z) >= 2) heavy.push_back(z);
      if (heavy.size() > 1) continue;
      if (heavy.size() == 1 && instance.forbidden(heavy.front())) continue;
      EventRecorder rec(instance, RuleId::R9);
      rec.color_blue(v);
      events.push_back(rec.take());
      break;
    }
  }
  return events;
}

std::vector<ReductionEvent> rule10(Instance &instance) {
  std::vector<ReductionEvent> events;
  if (closed_instance(instance)) return events;
  for (Vertex u : instance.vertices()) {
    if (!instance.forbidden(u)) continue;
    for (Vertex v : copy(instance.neighbors(u)))
      if (u < v && instance.forbidden(v)) events.push_back(single_edge(instance, RuleId::R10, u, v));
  }
  for (Vertex v : instance.vertices())
    if (instance.forbidden(v) && instance.demand(v) == 0) events.push_back(single_vertex(instance, RuleId::R10, v));
  return events;
}

std::vector<ReductionEvent> rule11(Instance &instance) {
  std::vector<ReductionEvent> events;
  if (closed_instance(instance)) return events;
  for (Vertex v : instance.vertices()) {
    if (!instance.forbidden(v) || instance.demand(v) < 1 || instance.degree(v) != 2) continue;
    const Vertex u = instance.neighbors(v)[0], w = instance.neighbors(v)[1];
    if (!instance.adjacent(u, w)) continue;
    EventRecorder rec(instance, RuleId::R11);
    rec.remove_edge(u, w);
    rec.change_demand(u, -1);
    rec.change_demand(w, -1);
    events.push_back(rec.take());
  }
  return events;
}

std::vector<ReductionEvent> rule12(Instance &instance) {
  std::vector<ReductionEvent> events;
  if (closed_instance(instance)) return events;
  for (Vertex v : instance.vertices()) {
    if (!instance.forbidden(v) || instance.demand(v) < 1) continue;
    VertexSet candidates;
    if (instance.degree(v) == 0) {
      candidates = instance.vertices();
    } else {
      const Vertex x = instance.neighbors(v).front();
      candidates = copy(instance.neighbors(x));
      candidates.insert(std::upper_bound(candidates.begin(), candidates.end(), x), x);
    }
    for (Vertex u : candidates) {
      if (u == v || instance.demand(u) != 1) continue;
      if (!open_within_closed(instance, v, u)) continue;
      EventRecorder rec(instance, RuleId::R12);
      rec.change_demand(u, -1);
      events.push_back(rec.take());
    }
  }
  return events;
}

std::vector<ReductionEvent> rule13(Instance &instance) {
  std::vector<ReductionEvent> events;
  if (closed_instance(instance)) return events;
  std::map<std::pair<Vertex, Vertex>, VertexSet> twins;
  for (Vertex v : instance.vertices())
    if (instance.demand(v) == 0 && instance.degree(v) == 2)
      twins[{instance.neighbors(v)[0], instance.neighbors(v)[1]}].push_back(v);
  for (const auto &[nb, group] : twins) {
    if (group.size() < 2) continue;
    auto keeper_it = std::find_if(group.begin(), group.end(), [&](Vertex v) { return !instance.forbidden(v); });
    const Vertex keeper = keeper_it == group.end() ? group.front() : *keeper_it;
    // Swapping u for its twin, or both twins for N(u), must stay inside V - P.
    const bool swappable =
        !instance.forbidden(keeper) && !instance.forbidden(nb.first) && !instance.forbidden(nb.second);
    for (Vertex u : group) {
      if (u == keeper) continue;
      if (instance.forbidden(u) || swappable) events.push_back(single_vertex(instance, RuleId::R13, u));
    }
  }
  return events;
}

std::vector<ReductionEvent> apply_rule(Instance &instance, RuleId rule) {
  switch (rule) {
    case RuleId::R1: return rule1(instance);
    case RuleId::R2: return rule2(instance);
    case RuleId::R3: return rule3(instance);
    case RuleId::R4: return rule4(instance);
    case RuleId::R5: return rule5(instance);
    case RuleId::R9: return rule9(instance);
    case RuleId::R10: return rule10(instance);
    case RuleId::R11: return rule11(instance);
    case RuleId::R12: return rule12(instance);
    case RuleId::R13: return rule13(instance);
    default: throw std::invalid_argument("not a local rule: " + to_string(rule));
  }
}

}  // namespace pvds
