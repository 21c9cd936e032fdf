#include "pvds/instance.hpp"

#include <algorithm>
#include <set>

#include "pvds/events.hpp"

namespace pvds {

const char *to_string(Status s) {
  switch (s) {
    case Status::Open:
      return "open";
    case Status::DecidedYes:
      return "yes";
    case Status::DecidedNo:
      return "no";
  }
  return "?";
}

UnknownVertex::UnknownVertex(Vertex v)
    : std::out_of_range("unknown vertex " + std::to_string(v)), vertex_(v) {}

Instance::Instance(int n, int budget)
    : adj_(n), demand_(n, 0), alive_(n, 1), forbidden_(n, 0), alive_count_(n), budget_(budget) {}

bool Instance::contains(Vertex v) const {
  return v >= 0 && v < capacity() && alive_[v];
}

void Instance::require(Vertex v) const {
  if (!contains(v)) throw UnknownVertex(v);
}

VertexSet Instance::vertices() const {
  VertexSet out;
  out.reserve(alive_count_);
  for (Vertex v = 0; v < capacity(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

std::span<const Vertex> Instance::neighbors(Vertex v) const {
  require(v);
  return adj_[v];
}

bool Instance::adjacent(Vertex u, Vertex v) const {
  auto nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

int Instance::demand(Vertex v) const {
  require(v);
  return demand_[v];
}

void Instance::set_demand(Vertex v, int d) {
  require(v);
  demand_[v] = d;
}

long long Instance::total_demand() const {
  long long sum = 0;
  for (Vertex v = 0; v < capacity(); ++v)
    if (alive_[v]) sum += demand_[v];
  return sum;
}

bool Instance::forbidden(Vertex v) const {
  require(v);
  return forbidden_[v] != 0;
}

void Instance::set_forbidden(Vertex v, bool value) {
  require(v);
  forbidden_[v] = value ? 1 : 0;
}

int Instance::forbidden_count() const {
  int c = 0;
  for (Vertex v = 0; v < capacity(); ++v) c += alive_[v] && forbidden_[v];
  return c;
}

Vertex Instance::add_vertex(int demand) {
  adj_.emplace_back();
  demand_.push_back(demand);
  alive_.push_back(1);
  forbidden_.push_back(0);
  ++alive_count_;
  return capacity() - 1;
}

void Instance::add_edge(Vertex u, Vertex v) {
  require(u);
  require(v);
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  if (u != v) adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edge_count_;
}

void Instance::remove_edge(Vertex u, Vertex v) {
  require(u);
  require(v);
  auto drop = [](std::vector<Vertex> &list, Vertex x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) return false;
    list.erase(it);
    return true;
  };
  if (!drop(adj_[u], v)) throw std::invalid_argument("no edge " + std::to_string(u) + "-" + std::to_string(v));
  if (u != v) drop(adj_[v], u);
  --edge_count_;
}

void Instance::remove_vertex(Vertex v) {
  require(v);
  for (Vertex u : adj_[v]) {
    if (u == v) continue;
    auto &list = adj_[u];
    list.erase(std::remove(list.begin(), list.end(), v), list.end());
  }
  edge_count_ -= static_cast<int>(adj_[v].size());
  adj_[v].clear();
  alive_[v] = 0;
  forbidden_[v] = 0;
  demand_[v] = 0;
  --alive_count_;
}

std::vector<std::string> validate(const Instance &instance, ValidationScope scope) {
  std::vector<std::string> out;
  const int n = instance.vertex_count();
  const int m = instance.edge_count();
  std::set<std::pair<Vertex, Vertex>> seen;
  for (Vertex v : instance.vertices()) {
    for (Vertex u : instance.neighbors(v)) {
      if (u == v) {
        out.push_back("self-loop at " + std::to_string(v));
        continue;
      }
      if (!instance.contains(u)) {
        out.push_back("edge " + std::to_string(v) + "-" + std::to_string(u) + " references unknown vertex");
        continue;
      }
      if (!instance.adjacent(u, v))
        out.push_back("asymmetric adjacency " + std::to_string(v) + "-" + std::to_string(u));
      if (v < u && !seen.emplace(v, u).second)
        out.push_back("duplicate edge " + std::to_string(v) + "-" + std::to_string(u));
    }
    const int d = instance.demand(v);
    if (d < 0) out.push_back("negative demand at " + std::to_string(v));
    if (scope == ValidationScope::Construction && d > std::max(n - 1, 0))
      out.push_back("demand at " + std::to_string(v) + " exceeds n-1");
  }
  if (n >= 3 && m > 3 * n - 6) out.push_back("m > 3n-6");
  if (instance.status() == Status::DecidedYes) {
    if (instance.total_demand() != 0) out.push_back("decided yes with non-zero demand");
    if (instance.budget() < 0) out.push_back("decided yes with negative budget");
  }
  return out;
}

bool is_subset(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool set_contains(std::span<const Vertex> s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool dominates(const Instance &instance, std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet sa(a.begin(), a.end());
  std::sort(sa.begin(), sa.end());
  for (Vertex v : sa) instance.require(v);
  for (Vertex v : b) {
    instance.require(v);
    if (set_contains(sa, v)) continue;
    int hits = 0;
    for (Vertex u : instance.neighbors(v)) hits += set_contains(sa, u);
    if (hits < instance.demand(v)) return false;
  }
  return true;
}

NeighborhoodView neighborhood(const Instance &instance, Vertex v) {
  NeighborhoodView view;
  view.center = v;
  auto nb = instance.neighbors(v);
  view.open.assign(nb.begin(), nb.end());
  view.closed = view.open;
  view.closed.insert(std::upper_bound(view.closed.begin(), view.closed.end(), v), v);
  for (Vertex u : nb) (instance.demand(u) >= 1 ? view.high : view.low).push_back(u);
  view.high_closed = view.high;
  view.high_closed.insert(std::upper_bound(view.high_closed.begin(), view.high_closed.end(), v), v);
  return view;
}

ReductionEvent force_into_solution(Instance &instance, Vertex v) {
  instance.require(v);
  EventRecorder rec(instance, RuleId::Force);
  const bool was_forbidden = instance.forbidden(v);
  const VertexSet nb(instance.neighbors(v).begin(), instance.neighbors(v).end());
  for (Vertex u : nb) rec.change_demand(u, -1);
  rec.remove_vertex(v);
  rec.change_budget(-1);
  if (was_forbidden || instance.budget() < 0) rec.decide(Status::DecidedNo);
  return rec.take();
}

}  // namespace pvds
