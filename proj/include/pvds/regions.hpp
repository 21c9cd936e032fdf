#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pvds/events.hpp"
#include "pvds/instance.hpp"
#include "pvds/planarity.hpp"

namespace pvds {

// Short endpoint-to-endpoint paths that may bound a candidate region.
//   Type1: a1 x a2.
//   Type2: a1 v c v' a2 with d(c) = 0, d(v) = 1, v not adjacent to a2 and
//          v' not adjacent to a1.
//   Type3: a1 v v' a2 with d(v) <= 1.
// Types 2 and 3 are read in the a1 -> a2 direction.
enum class PathType { Type1 = 1, Type2 = 2, Type3 = 3 };

class MalformedPath : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class StaleEmbedding : public std::logic_error {
 public:
  StaleEmbedding() : std::logic_error("embedding does not match the current instance") {}
};

struct TypedPath {
  Vertex a1 = -1;
  Vertex a2 = -1;
  VertexSet vertices;  // a1 ... a2 in walking order
  PathType type = PathType::Type1;
  bool reversed = false;  // pattern holds when read from a2 to a1

  std::span<const Vertex> inner() const {
    return std::span<const Vertex>(vertices).subspan(1, vertices.size() - 2);
  }
};

std::optional<PathType> classify_path(const Instance &instance, std::span<const Vertex> path, Vertex a1,
                                      Vertex a2);

struct PathEnumeration {
  std::vector<TypedPath> paths;
  bool capped = false;
};

// Every simple a1a2-path of length at most 4 that has a type in either
// direction. Order is the lexicographic order of the vertex sequences.
PathEnumeration enumerate_boundary_paths(const Instance &instance, Vertex a1, Vertex a2, int max_paths = 0);

// Y, B, I, I', O'. The boundary that B and Y refer to is the inner part of
// the two paths (a1 and a2 excluded). I' and O' are taken over the closed
// region.
struct RegionSets {
  VertexSet y;
  VertexSet b;
  VertexSet i;
  VertexSet iprime;
  VertexSet oprime;
};

struct CandidateRegion {
  Vertex a1 = -1;
  Vertex a2 = -1;
  TypedPath o1;
  TypedPath o2;
  CycleSide side = CycleSide::Forward;
  VertexSet boundary;  // sorted, includes a1 and a2
  VertexSet interior;  // sorted, strictly inside
  RegionSets sets;

  VertexSet closed() const;
};

RegionSets region_partition(const Instance &instance, const CandidateRegion &region);

struct RegionOptions {
  int max_paths_per_pair = 512;  // 0 disables the cap
  bool parallel_pairs = true;
};

struct RegionScan {
  std::vector<CandidateRegion> regions;  // inclusion-maximal, grouped by pair
  bool capped = false;
  long long examined = 0;  // cycle sides tested
};

// Inclusion-maximal candidate regions between a1 and a2. Throws
// StaleEmbedding if rs was computed for a different graph.
RegionScan enumerate_candidate_regions(const Instance &instance, const RotationSystem &rs, Vertex a1, Vertex a2,
                                       const RegionOptions &options = {});

// All endpoint pairs a1 < a2. The serial version is the reference for the
// OpenMP one; both return identical scans.
RegionScan enumerate_all_regions_serial(const Instance &instance, const RotationSystem &rs,
                                        const RegionOptions &options = {});
RegionScan enumerate_all_regions(const Instance &instance, const RotationSystem &rs,
                                 const RegionOptions &options = {});

// Blue-coloring rules over one region. Each colored vertex is its own event.
// The region's sets are recomputed against the current instance first.
std::vector<ReductionEvent> rule6(Instance &instance, const CandidateRegion &region);
std::vector<ReductionEvent> rule7(Instance &instance, const CandidateRegion &region);
std::vector<ReductionEvent> rule8(Instance &instance, const CandidateRegion &region);

// rule6, then rule7 or rule8 depending on O'.
std::vector<ReductionEvent> apply_region_rules(Instance &instance, const CandidateRegion &region);

}  // namespace pvds
