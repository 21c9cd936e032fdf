#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pvds/instance.hpp"

namespace pvds {

class NonPlanar : public std::runtime_error {
 public:
  NonPlanar(std::vector<std::pair<Vertex, Vertex>> witness);
  // Edges of a Kuratowski subgraph (subdivision of K5 or K3,3).
  const std::vector<std::pair<Vertex, Vertex>> &witness() const { return witness_; }

 private:
  std::vector<std::pair<Vertex, Vertex>> witness_;
};

struct DirectedEdge {
  Vertex from = -1;
  Vertex to = -1;
  friend bool operator==(const DirectedEdge &, const DirectedEdge &) = default;
};

using Face = std::vector<DirectedEdge>;

// Combinatorial planar embedding. Faces are traced by
//   next(u -> v) = v -> successor(v, u)
// so every directed edge lies on exactly one face. Each connected component
// is embedded on its own and all further components sit in the outer face of
// the first one.
class RotationSystem {
 public:
  RotationSystem() = default;

  int capacity() const { return static_cast<int>(rotation_.size()); }
  bool contains(Vertex v) const { return v >= 0 && v < capacity() && alive_[v]; }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return edge_count_; }

  std::span<const Vertex> rotation(Vertex v) const;
  // Neighbor that follows u in the cyclic order around v.
  Vertex successor(Vertex v, Vertex u) const;

  const std::vector<Face> &faces() const { return faces_; }
  int face_of(Vertex from, Vertex to) const;

  int component(Vertex v) const { return component_[v]; }
  int component_count() const { return component_count_; }
  // Index into faces(), or -1 for a component that is a single vertex.
  int outer_face_of_component(int c) const { return outer_face_[c]; }
  int outer_face() const { return component_count_ ? outer_face_[0] : -1; }

  // Faces of the merged drawing: traced faces plus one per isolated vertex,
  // minus the outer faces that coincide when components share the plane.
  int merged_face_count() const;

  // True iff the embedding was computed from a graph with the same vertices
  // and edges as the instance.
  bool matches(const Instance &instance) const;

 private:
  friend RotationSystem embed(const Instance &instance);
  int position(Vertex v, Vertex u) const;

  std::vector<std::vector<Vertex>> rotation_;
  std::vector<std::vector<int>> face_id_;
  std::vector<char> alive_;
  std::vector<int> component_;
  std::vector<int> outer_face_;
  std::vector<Face> faces_;
  int component_count_ = 0;
  int vertex_count_ = 0;
  int edge_count_ = 0;
  std::uint64_t fingerprint_ = 0;
};

std::uint64_t structure_fingerprint(const Instance &instance);

// Throws NonPlanar. Deterministic for a fixed instance.
RotationSystem embed(const Instance &instance);

std::vector<Face> faces(const RotationSystem &rs);

enum class CycleSide {
  Forward,   // side holding the faces traced along c0 -> c1 -> ...
  Backward,  // side holding the faces traced along the reverse direction
};

struct ClosedWalkRegion {
  VertexSet boundary;  // cycle order, not sorted
  CycleSide side = CycleSide::Forward;
  VertexSet inside;    // sorted
};

class InvalidCycle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Splits the vertices off a simple cycle of the embedded graph into its two
// sides. Vertices of other components go to the side holding the outer face
// of the cycle's component.
std::pair<ClosedWalkRegion, ClosedWalkRegion> cycle_sides(const RotationSystem &rs,
                                                           std::span<const Vertex> cycle);

}  // namespace pvds
