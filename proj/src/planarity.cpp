#include "pvds/planarity.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <deque>
#include <string>

namespace pvds {

namespace {

std::string describe_witness(const std::vector<std::pair<Vertex, Vertex>> &w) {
  std::string s = "graph is not planar";
  if (w.empty()) return s;
  s += "; kuratowski subgraph edges:";
  for (auto [u, v] : w) s += " " + std::to_string(u) + "-" + std::to_string(v);
  return s;
}

}  // namespace

NonPlanar::NonPlanar(std::vector<std::pair<Vertex, Vertex>> witness)
    : std::runtime_error(describe_witness(witness)), witness_(std::move(witness)) {}

std::uint64_t structure_fingerprint(const Instance &instance) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(instance.capacity()));
  for (Vertex v : instance.vertices()) {
    mix(static_cast<std::uint64_t>(v) << 1 | 1);
    for (Vertex u : instance.neighbors(v)) mix(static_cast<std::uint64_t>(u));
  }
  return h;
}

std::span<const Vertex> RotationSystem::rotation(Vertex v) const {
  if (!contains(v)) throw UnknownVertex(v);
  return rotation_[v];
}

int RotationSystem::position(Vertex v, Vertex u) const {
  const auto &rot = rotation_[v];
  for (std::size_t i = 0; i < rot.size(); ++i)
    if (rot[i] == u) return static_cast<int>(i);
  throw std::invalid_argument("no edge " + std::to_string(v) + "-" + std::to_string(u) + " in embedding");
}

Vertex RotationSystem::successor(Vertex v, Vertex u) const {
  if (!contains(v)) throw UnknownVertex(v);
  const auto &rot = rotation_[v];
  return rot[(position(v, u) + 1) % rot.size()];
}

int RotationSystem::face_of(Vertex from, Vertex to) const {
  if (!contains(from)) throw UnknownVertex(from);
  return face_id_[from][position(from, to)];
}

int RotationSystem::merged_face_count() const {
  if (component_count_ == 0) return 0;
  int isolated = 0;
  for (int c = 0; c < component_count_; ++c) isolated += outer_face_[c] < 0;
  return static_cast<int>(faces_.size()) + isolated - (component_count_ - 1);
}

bool RotationSystem::matches(const Instance &instance) const {
  return fingerprint_ == structure_fingerprint(instance) && vertex_count_ == instance.vertex_count() &&
         edge_count_ == instance.edge_count();
}

RotationSystem embed(const Instance &instance) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                      boost::property<boost::vertex_index_t, int>,
                                      boost::property<boost::edge_index_t, int>>;
  using EdgeDesc = boost::graph_traits<Graph>::edge_descriptor;

  const VertexSet ids = instance.vertices();
  std::vector<int> compact(instance.capacity(), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) compact[ids[i]] = static_cast<int>(i);

  Graph g(ids.size());
  int edge_index = 0;
  for (Vertex v : ids)
    for (Vertex u : instance.neighbors(v))
      if (v < u) {
        auto [e, ok] = boost::add_edge(compact[v], compact[u], g);
        (void)ok;
        boost::put(boost::edge_index, g, e, edge_index++);
      }

  std::vector<std::vector<EdgeDesc>> emb(ids.size());
  std::vector<EdgeDesc> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = g,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, g)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  if (!planar) {
    std::vector<std::pair<Vertex, Vertex>> witness;
    for (const auto &e : kuratowski) {
      Vertex a = ids[boost::source(e, g)], b = ids[boost::target(e, g)];
      witness.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(witness.begin(), witness.end());
    throw NonPlanar(std::move(witness));
  }

  RotationSystem rs;
  const int cap = instance.capacity();
  rs.rotation_.assign(cap, {});
  rs.face_id_.assign(cap, {});
  rs.alive_.assign(cap, 0);
  rs.component_.assign(cap, -1);
  rs.vertex_count_ = instance.vertex_count();
  rs.edge_count_ = instance.edge_count();
  rs.fingerprint_ = structure_fingerprint(instance);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const Vertex v = ids[i];
    rs.alive_[v] = 1;
    for (const auto &e : emb[i]) {
      const auto s = boost::source(e, g), t = boost::target(e, g);
      rs.rotation_[v].push_back(ids[static_cast<std::size_t>(s) == i ? t : s]);
    }
    rs.face_id_[v].assign(rs.rotation_[v].size(), -1);
  }

  // Components in order of their smallest vertex.
  for (Vertex root : ids) {
    if (rs.component_[root] >= 0) continue;
    const int c = rs.component_count_++;
    std::deque<Vertex> queue{root};
    rs.component_[root] = c;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex u : rs.rotation_[v])
        if (rs.component_[u] < 0) {
          rs.component_[u] = c;
          queue.push_back(u);
        }
    }
  }

  for (Vertex v : ids)
    for (std::size_t i = 0; i < rs.rotation_[v].size(); ++i) {
      if (rs.face_id_[v][i] >= 0) continue;
      const int f = static_cast<int>(rs.faces_.size());
      Face walk;
      Vertex from = v, to = rs.rotation_[v][i];
      while (true) {
        int &slot = rs.face_id_[from][rs.position(from, to)];
        if (slot >= 0) break;
        slot = f;
        walk.push_back({from, to});
        const Vertex next = rs.successor(to, from);
        from = to;
        to = next;
      }
      rs.faces_.push_back(std::move(walk));
    }

  rs.outer_face_.assign(rs.component_count_, -1);
  for (Vertex v : ids) {
    const int c = rs.component_[v];
    if (rs.outer_face_[c] < 0 && !rs.rotation_[v].empty()) rs.outer_face_[c] = rs.face_id_[v][0];
  }
  // A component whose smallest vertex has no edges is an isolated vertex;
  // the loop above only assigns faces to components that have edges.
  return rs;
}

std::vector<Face> faces(const RotationSystem &rs) { return rs.faces(); }

std::pair<ClosedWalkRegion, ClosedWalkRegion> cycle_sides(const RotationSystem &rs,
                                                           std::span<const Vertex> cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 3) throw InvalidCycle("cycle needs at least 3 vertices");
  std::vector<int> pos(rs.capacity(), -1);
  for (int i = 0; i < len; ++i) {
    const Vertex v = cycle[i];
    if (!rs.contains(v)) throw UnknownVertex(v);
    if (pos[v] >= 0) throw InvalidCycle("cycle is not simple: vertex " + std::to_string(v) + " repeats");
    pos[v] = i;
  }
  for (int i = 0; i < len; ++i) {
    const Vertex a = cycle[i], b = cycle[(i + 1) % len];
    const auto rot = rs.rotation(a);
    if (std::find(rot.begin(), rot.end(), b) == rot.end())
      throw InvalidCycle("not a cycle: missing edge " + std::to_string(a) + "-" + std::to_string(b));
  }

  // 0 = unlabeled, 1 = forward side, 2 = backward side.
  // Around x, neighbors strictly after `next` and before `prev` lie backward;
  // the traced face entering x along prev -> x leaves towards the forward side.
  auto index_in = [](std::span<const Vertex> rot, Vertex u) {
    return static_cast<int>(std::find(rot.begin(), rot.end(), u) - rot.begin());
  };
  auto side_at = [&](Vertex x, std::span<const Vertex> rot, int j) {
    const int i = pos[x], d = static_cast<int>(rot.size());
    const int pn = index_in(rot, cycle[(i + 1) % len]), pp = index_in(rot, cycle[(i + len - 1) % len]);
    const int off = (j - pn + d) % d;
    return off > 0 && off < (pp - pn + d) % d ? 2 : 1;
  };
  auto angular_side = [&](Vertex x, Vertex y) {
    const auto rot = rs.rotation(x);
    return side_at(x, rot, index_in(rot, y));
  };

  std::vector<int> label(rs.capacity(), 0);
  std::deque<Vertex> queue;
  for (int i = 0; i < len; ++i) {
    const Vertex x = cycle[i];
    const auto rot = rs.rotation(x);
    const int d = static_cast<int>(rot.size());
    const int pn = index_in(rot, cycle[(i + 1) % len]), pp = index_in(rot, cycle[(i + len - 1) % len]);
    for (int j = 0; j < d; ++j) {
      const Vertex y = rot[j];
      if (pos[y] >= 0) continue;
      const int off = (j - pn + d) % d;
      const int s = off > 0 && off < (pp - pn + d) % d ? 2 : 1;
      if (label[y] == 0) {
        label[y] = s;
        queue.push_back(y);
      } else if (label[y] != s) {
        throw InvalidCycle("embedding inconsistent with cycle sides");
      }
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : rs.rotation(v)) {
      if (pos[u] >= 0) continue;
      if (label[u] == 0) {
        label[u] = label[v];
        queue.push_back(u);
      } else if (label[u] != label[v]) {
        throw InvalidCycle("embedding inconsistent with cycle sides");
      }
    }
  }

  int outer_side = 1;
  const int outer = rs.outer_face_of_component(rs.component(cycle[0]));
  if (outer >= 0) {
    for (const DirectedEdge &e : rs.faces()[outer]) {
      if (pos[e.from] < 0) {
        outer_side = label[e.from];
        break;
      }
      if (pos[e.to] >= 0) {
        const int d = (pos[e.to] - pos[e.from] + len) % len;
        if (d == 1) { outer_side = 1; break; }
        if (d == len - 1) { outer_side = 2; break; }
      }
      outer_side = angular_side(e.from, e.to);
      break;
    }
  }

  const int own = rs.component(cycle[0]);
  ClosedWalkRegion fwd, bwd;
  fwd.boundary.assign(cycle.begin(), cycle.end());
  bwd.boundary = fwd.boundary;
  fwd.side = CycleSide::Forward;
  bwd.side = CycleSide::Backward;
  for (Vertex v = 0; v < rs.capacity(); ++v) {
    if (!rs.contains(v) || pos[v] >= 0) continue;
    const int s = rs.component(v) == own ? label[v] : outer_side;
    (s == 1 ? fwd : bwd).inside.push_back(v);
  }
  return {std::move(fwd), std::move(bwd)};
}

}  // namespace pvds
