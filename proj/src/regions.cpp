#include "pvds/regions.hpp"

#include <algorithm>
#include <exception>
#include <map>

namespace pvds {

namespace {

VertexSet sorted_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet sorted_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet sorted_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool intersects(std::span<const Vertex> a, std::span<const Vertex> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    (*i < *j) ? ++i : ++j;
  }
  return false;
}

std::optional<PathType> classify_unchecked(const Instance &inst, std::span<const Vertex> p, Vertex a1,
                                           Vertex a2) {
  switch (p.size()) {
    case 3:
      return PathType::Type1;
    case 4:
      if (inst.demand(p[1]) <= 1) return PathType::Type3;
      return std::nullopt;
    case 5: {
      const Vertex v = p[1], c = p[2], w = p[3];
      if (inst.demand(c) == 0 && inst.demand(v) == 1 && !inst.adjacent(v, a2) && !inst.adjacent(w, a1))
        return PathType::Type2;
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

std::optional<TypedPath> type_path(const Instance &inst, const VertexSet &path) {
  const Vertex a1 = path.front(), a2 = path.back();
  TypedPath tp;
  tp.a1 = a1;
  tp.a2 = a2;
  tp.vertices = path;
  if (auto t = classify_unchecked(inst, path, a1, a2)) {
    tp.type = *t;
    return tp;
  }
  VertexSet rev(path.rbegin(), path.rend());
  if (auto t = classify_unchecked(inst, rev, a2, a1)) {
    tp.type = *t;
    tp.reversed = true;
    return tp;
  }
  return std::nullopt;
}

// Typed paths from a1 to every end accepted by `want`, bucketed by end.
// With stop_at_hit the search does not walk through accepted ends; that is
// only a pruning when a single end is wanted.
template <class Want>
void collect_paths(const Instance &inst, Vertex a1, Want want, bool stop_at_hit, int max_paths,
                   std::map<Vertex, PathEnumeration> &out) {
  VertexSet path{a1};
  std::vector<char> on_path(inst.capacity(), 0);
  on_path[a1] = 1;
  auto dfs = [&](auto &&self) -> void {
    const Vertex tail = path.back();
    const int len = static_cast<int>(path.size()) - 1;
    if (len >= 2 && want(tail)) {
      if (auto tp = type_path(inst, path)) {
        auto &bucket = out[tail];
        if (max_paths > 0 && static_cast<int>(bucket.paths.size()) >= max_paths)
          bucket.capped = true;
        else
          bucket.paths.push_back(std::move(*tp));
      }
    }
    if (len >= 4 || (stop_at_hit && len >= 1 && want(tail))) return;
    for (Vertex u : inst.neighbors(tail)) {
      if (on_path[u]) continue;
      on_path[u] = 1;
      path.push_back(u);
      self(self);
      path.pop_back();
      on_path[u] = 0;
    }
  };
  dfs(dfs);
}

bool dominated_by_endpoints(const Instance &inst, Vertex w, Vertex a1, Vertex a2) {
  return inst.demand(w) <= int(inst.adjacent(w, a1)) + int(inst.adjacent(w, a2));
}

void scan_pair(const Instance &inst, const RotationSystem &rs, Vertex a1, Vertex a2,
               const std::vector<TypedPath> &paths, RegionScan &scan) {
  struct Candidate {
    VertexSet closed;
    CandidateRegion region;
  };
  std::vector<Candidate> candidates;
  std::map<VertexSet, std::size_t> seen;

  for (std::size_t i = 0; i < paths.size(); ++i) {
    VertexSet inner_i(paths[i].inner().begin(), paths[i].inner().end());
    std::sort(inner_i.begin(), inner_i.end());
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      VertexSet inner_j(paths[j].inner().begin(), paths[j].inner().end());
      std::sort(inner_j.begin(), inner_j.end());
      if (intersects(inner_i, inner_j)) continue;

      VertexSet cycle = paths[i].vertices;
      const auto back = paths[j].inner();
      cycle.insert(cycle.end(), back.rbegin(), back.rend());
      auto [fwd, bwd] = cycle_sides(rs, cycle);
      for (ClosedWalkRegion *side : {&fwd, &bwd}) {
        ++scan.examined;
        const bool ok = std::all_of(side->inside.begin(), side->inside.end(),
                                    [&](Vertex w) { return dominated_by_endpoints(inst, w, a1, a2); });
        if (!ok) continue;
        CandidateRegion r;
        r.a1 = a1;
        r.a2 = a2;
        r.o1 = paths[i];
        r.o2 = paths[j];
        r.side = side->side;
        r.boundary = cycle;
        std::sort(r.boundary.begin(), r.boundary.end());
        r.interior = side->inside;
        VertexSet closed = sorted_union(r.boundary, r.interior);
        if (seen.contains(closed)) continue;
        seen.emplace(closed, candidates.size());
        candidates.push_back({std::move(closed), std::move(r)});
      }
    }
  }

  // Largest first: strict inclusion is transitive, so comparing against the
  // maximal sets found so far is enough.
  std::vector<std::size_t> by_size(candidates.size());
  for (std::size_t i = 0; i < by_size.size(); ++i) by_size[i] = i;
  std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t x, std::size_t y) {
    return candidates[x].closed.size() > candidates[y].closed.size();
  });
  std::vector<std::size_t> kept;
  std::vector<char> maximal(candidates.size(), 0);
  for (std::size_t i : by_size) {
    const auto &a = candidates[i].closed;
    const bool covered = std::any_of(kept.begin(), kept.end(), [&](std::size_t j) {
      return a.size() < candidates[j].closed.size() && is_subset(a, candidates[j].closed);
    });
    if (covered) continue;
    maximal[i] = 1;
    kept.push_back(i);
  }

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!maximal[i]) continue;
    CandidateRegion r = std::move(candidates[i].region);
    r.sets = region_partition(inst, r);
    scan.regions.push_back(std::move(r));
  }
}

RegionScan scan_from(const Instance &inst, const RotationSystem &rs, Vertex a1, const RegionOptions &options) {
  RegionScan scan;
  std::map<Vertex, PathEnumeration> buckets;
  collect_paths(
      inst, a1, [a1](Vertex t) { return t > a1; }, false, options.max_paths_per_pair, buckets);
  for (auto &[a2, bucket] : buckets) {
    scan.capped |= bucket.capped;
    if (bucket.paths.size() >= 2) scan_pair(inst, rs, a1, a2, bucket.paths, scan);
  }
  return scan;
}

void merge_into(RegionScan &total, RegionScan &&part) {
  total.capped |= part.capped;
  total.examined += part.examined;
  for (auto &r : part.regions) total.regions.push_back(std::move(r));
}

}  // namespace

std::optional<PathType> classify_path(const Instance &instance, std::span<const Vertex> path, Vertex a1,
                                      Vertex a2) {
  if (path.size() < 2 || path.front() != a1 || path.back() != a2 || a1 == a2)
    throw MalformedPath("path must run from a1 to a2 with a1 != a2");
  for (Vertex v : path) instance.require(v);
  VertexSet sorted(path.begin(), path.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw MalformedPath("path is not simple");
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!instance.adjacent(path[i], path[i + 1]))
      throw MalformedPath("missing edge " + std::to_string(path[i]) + "-" + std::to_string(path[i + 1]));
  return classify_unchecked(instance, path, a1, a2);
}

PathEnumeration enumerate_boundary_paths(const Instance &instance, Vertex a1, Vertex a2, int max_paths) {
  instance.require(a1);
  instance.require(a2);
  if (a1 == a2) return {};
  std::map<Vertex, PathEnumeration> buckets;
  collect_paths(
      instance, a1, [a2](Vertex t) { return t == a2; }, true, max_paths, buckets);
  auto it = buckets.find(a2);
  return it == buckets.end() ? PathEnumeration{} : std::move(it->second);
}

VertexSet CandidateRegion::closed() const { return sorted_union(boundary, interior); }

RegionSets region_partition(const Instance &instance, const CandidateRegion &region) {
  RegionSets s;
  VertexSet inner;
  for (Vertex v : region.boundary)
    if (v != region.a1 && v != region.a2) inner.push_back(v);
  for (Vertex v : inner)
    if (instance.demand(v) >= 2) s.y.push_back(v);
  for (Vertex w : region.interior)
    (intersects(instance.neighbors(w), inner) ? s.b : s.i).push_back(w);

  const VertexSet closed = region.closed();
  for (Vertex v : closed) {
    const Vertex one[] = {v};
    if (!instance.forbidden(v) && dominates(instance, one, s.i)) s.iprime.push_back(v);
    if (sorted_intersection(instance.neighbors(v), s.y).size() >= 2) s.oprime.push_back(v);
  }
  return s;
}

RegionScan enumerate_candidate_regions(const Instance &instance, const RotationSystem &rs, Vertex a1, Vertex a2,
                                       const RegionOptions &options) {
  if (!rs.matches(instance)) throw StaleEmbedding();
  auto paths = enumerate_boundary_paths(instance, a1, a2, options.max_paths_per_pair);
  RegionScan scan;
  scan.capped = paths.capped;
  if (paths.paths.size() >= 2) scan_pair(instance, rs, a1, a2, paths.paths, scan);
  return scan;
}

RegionScan enumerate_all_regions_serial(const Instance &instance, const RotationSystem &rs,
                                        const RegionOptions &options) {
  if (!rs.matches(instance)) throw StaleEmbedding();
  RegionScan total;
  for (Vertex a1 : instance.vertices()) merge_into(total, scan_from(instance, rs, a1, options));
  return total;
}

RegionScan enumerate_all_regions(const Instance &instance, const RotationSystem &rs,
                                 const RegionOptions &options) {
  if (!rs.matches(instance)) throw StaleEmbedding();
  const VertexSet ids = instance.vertices();
  const int count = static_cast<int>(ids.size());
  std::vector<RegionScan> parts(count);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (options.parallel_pairs)
  for (int i = 0; i < count; ++i) {
    try {
      parts[i] = scan_from(instance, rs, ids[i], options);
    } catch (...) {
#pragma omp critical(pvds_region_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  RegionScan total;
  for (auto &p : parts) merge_into(total, std::move(p));
  return total;
}

namespace {

bool region_live(const Instance &inst, const CandidateRegion &r) {
  if (!inst.contains(r.a1) || !inst.contains(r.a2)) return false;
  if (inst.forbidden(r.a1) || inst.forbidden(r.a2)) return false;
  for (Vertex v : r.boundary)
    if (!inst.contains(v)) return false;
  return true;
}

bool y_selectable(const Instance &inst, const RegionSets &s) {
  return std::none_of(s.y.begin(), s.y.end(), [&](Vertex y) { return inst.forbidden(y); });
}

bool pair_dominates(const Instance &inst, Vertex u, Vertex w, std::span<const Vertex> target) {
  const Vertex a[] = {std::min(u, w), std::max(u, w)};
  return dominates(inst, std::span<const Vertex>(a, u == w ? 1 : 2), target);
}

VertexSet neighbors_of_set(const Instance &inst, std::span<const Vertex> s) {
  VertexSet out;
  for (Vertex v : s) out = sorted_union(out, inst.neighbors(v));
  return out;
}

ReductionEvent color(Instance &inst, RuleId rule, Vertex v) {
  EventRecorder rec(inst, rule);
  rec.color_blue(v);
  return rec.take();
}

}  // namespace

std::vector<ReductionEvent> rule6(Instance &instance, const CandidateRegion &region) {
  std::vector<ReductionEvent> events;
  if (!region_live(instance, region)) return events;
  const RegionSets s = region_partition(instance, region);
  if (s.i.empty()) return events;
  for (Vertex u : region.interior) {
    if (!instance.contains(u) || instance.forbidden(u)) continue;
    const Vertex one[] = {u};
    if (dominates(instance, one, s.i)) continue;  // u in I'
    if (intersects(instance.neighbors(u), s.y)) continue;
    events.push_back(color(instance, RuleId::R6, u));
  }
  return events;
}

std::vector<ReductionEvent> rule7(Instance &instance, const CandidateRegion &region) {
  std::vector<ReductionEvent> events;
  if (!region_live(instance, region)) return events;
  const RegionSets s = region_partition(instance, region);
  if (s.i.empty() || s.oprime.empty() || !y_selectable(instance, s)) return events;
  const VertexSet ny = neighbors_of_set(instance, s.y);
  const VertexSet i_a1 = sorted_intersection(s.i, instance.neighbors(region.a1));
  const VertexSet i_a2 = sorted_intersection(s.i, instance.neighbors(region.a2));
  for (Vertex w : region.interior) {
    if (!instance.contains(w) || instance.forbidden(w)) continue;
    const Vertex one[] = {w};
    if (set_contains(s.oprime, w) || dominates(instance, one, s.i)) continue;
    const bool with_ny =
        std::any_of(ny.begin(), ny.end(), [&](Vertex w2) { return pair_dominates(instance, w, w2, s.i); });
    if (with_ny) continue;
    const bool with_oprime = std::any_of(s.oprime.begin(), s.oprime.end(), [&](Vertex w2) {
      return pair_dominates(instance, w, w2, i_a1) || pair_dominates(instance, w, w2, i_a2);
    });
    if (with_oprime) continue;
    events.push_back(color(instance, RuleId::R7, w));
  }
  return events;
}

std::vector<ReductionEvent> rule8(Instance &instance, const CandidateRegion &region) {
  std::vector<ReductionEvent> events;
  if (!region_live(instance, region)) return events;
  const RegionSets s = region_partition(instance, region);
  if (s.i.empty() || !s.oprime.empty() || !y_selectable(instance, s)) return events;
  const VertexSet ny = neighbors_of_set(instance, s.y);
  // The third exemption is stated for a1; the endpoints are interchangeable,
  // so it is checked for either one.
  std::vector<VertexSet> rest;
  for (Vertex a : {region.a1, region.a2})
    if (is_subset(s.y, instance.neighbors(a))) rest.push_back(sorted_difference(s.i, instance.neighbors(a)));

  for (Vertex u : region.interior) {
    if (!instance.contains(u) || instance.forbidden(u)) continue;
    const Vertex one[] = {u};
    if (dominates(instance, one, s.i)) continue;
    bool exempt = false;
    for (Vertex y : sorted_intersection(instance.neighbors(u), s.y)) {
      for (Vertex u2 : instance.neighbors(y))
        if (pair_dominates(instance, u, u2, s.i)) {
          exempt = true;
          break;
        }
      if (exempt) break;
    }
    for (const VertexSet &target : rest) {
      if (exempt) break;
      exempt = std::any_of(ny.begin(), ny.end(), [&](Vertex u2) { return pair_dominates(instance, u, u2, target); });
    }
    if (exempt) continue;
    events.push_back(color(instance, RuleId::R8, u));
  }
  return events;
}

std::vector<ReductionEvent> apply_region_rules(Instance &instance, const CandidateRegion &region) {
  auto events = rule6(instance, region);
  const RegionSets s = region_partition(instance, region);
  auto more = s.oprime.empty() ? rule8(instance, region) : rule7(instance, region);
  for (auto &e : more) events.push_back(std::move(e));
  return events;
}

}  // namespace pvds
