#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pvds {

using Vertex = std::int32_t;
using VertexSet = std::vector<Vertex>;  // kept sorted ascending, no duplicates

enum class Status { Open, DecidedYes, DecidedNo };

const char *to_string(Status s);

class UnknownVertex : public std::out_of_range {
 public:
  explicit UnknownVertex(Vertex v);
  Vertex vertex() const { return vertex_; }

 private:
  Vertex vertex_;
};

struct ReductionEvent;

// Annotated planar vector dominating set instance.
//
// Vertex ids are dense in [0, capacity()) and stay stable across deletions:
// removed vertices are tombstoned, never renumbered. Adjacency lists are kept
// sorted. add_edge() performs no simplicity checks so that validate() can
// report malformed input; every reduction keeps the graph simple.
class Instance {
 public:
  Instance() = default;
  explicit Instance(int n, int budget = 0);

  int capacity() const { return static_cast<int>(adj_.size()); }
  int vertex_count() const { return alive_count_; }
  int edge_count() const { return edge_count_; }

  bool contains(Vertex v) const;
  // Throws UnknownVertex unless contains(v).
  void require(Vertex v) const;
  VertexSet vertices() const;

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  int demand(Vertex v) const;
  void set_demand(Vertex v, int d);
  long long total_demand() const;

  int budget() const { return budget_; }
  void set_budget(int k) { budget_ = k; }

  bool forbidden(Vertex v) const;
  void set_forbidden(Vertex v, bool value = true);
  int forbidden_count() const;

  Status status() const { return status_; }
  void set_status(Status s) { status_ = s; }

  Vertex add_vertex(int demand = 0);
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  // Removes v together with its incident edges.
  void remove_vertex(Vertex v);

  friend bool operator==(const Instance &, const Instance &) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<int> demand_;
  std::vector<char> alive_;
  std::vector<char> forbidden_;
  int alive_count_ = 0;
  int edge_count_ = 0;
  int budget_ = 0;
  Status status_ = Status::Open;
};

// N(v), N[v] and the demand split of the open neighborhood. high_closed is
// N_h(v) plus v itself, whatever d(v) is.
struct NeighborhoodView {
  Vertex center = -1;
  VertexSet open;
  VertexSet closed;
  VertexSet high;
  VertexSet low;
  VertexSet high_closed;
};

enum class ValidationScope {
  Construction,  // freshly built or parsed: demand(v) <= n - 1 is enforced
  Structure,     // mid-reduction: only graph and annotation consistency
};

std::vector<std::string> validate(const Instance &instance,
                                  ValidationScope scope = ValidationScope::Construction);

// True iff every v in B \ A has at least demand(v) neighbors in A.
bool dominates(const Instance &instance, std::span<const Vertex> a, std::span<const Vertex> b);

NeighborhoodView neighborhood(const Instance &instance, Vertex v);

// Puts v into the solution: deletes v, decrements each neighbor's demand
// (clamped at zero) and spends one unit of budget. Forcing a forbidden vertex
// or overdrawing the budget decides the instance NO.
ReductionEvent force_into_solution(Instance &instance, Vertex v);

// Sorted-set helpers shared across modules.
bool is_subset(std::span<const Vertex> a, std::span<const Vertex> b);
bool set_contains(std::span<const Vertex> s, Vertex v);

}  // namespace pvds
