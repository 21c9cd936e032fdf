#pragma once

#include <cstdint>
#include <string>

#include "pvds/instance.hpp"

namespace pvds {

// Random planar graph: insert vertices into random faces of a growing
// triangulation, then keep each edge with probability edge_density.
// Demands 0, budget 0.
Instance generate_planar(int n, double edge_density, std::uint64_t seed);

enum class ProfileKind { RDom, AlphaDom, Bdvd, Pids, Random };

struct DemandProfile {
  ProfileKind kind = ProfileKind::Random;
  int r = 1;           // RDom
  double alpha = 0.5;  // AlphaDom
  int t = 0;           // Bdvd
  int max_demand = 1;  // Random
};

// "r:<r>", "alpha:<x>", "bdvd:<t>", "pids", "random:<max>".
DemandProfile parse_profile(const std::string &text);
std::string to_string(const DemandProfile &profile);

// Assigns demands to every vertex according to the profile. The random
// profile draws from `seed` and is capped at n-1 so the result validates.
Instance make_special_case(Instance instance, const DemandProfile &profile, std::uint64_t seed = 0);

}  // namespace pvds
