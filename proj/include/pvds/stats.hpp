#pragma once

#include <array>
#include <string>

#include "pvds/events.hpp"
#include "pvds/rules.hpp"

namespace pvds {

struct KernelStats {
  int n_before = 0, m_before = 0, k_before = 0;
  int n_after = 0, m_after = 0, k_after = 0;
  Status status = Status::Open;
  long long blue_count = 0;  // vertices colored blue during reduction
  std::array<long long, kRuleIdCount> rule_fire_counts{};
  long long rounds = 0;
  long long event_count = 0;
  long long region_count_examined = 0;
  int max_region_interior = 0;  // over the final graph
  bool region_cap_hit = false;
  double bound_ratio = 0.0;  // n_after / max(k_after, 1)
};

// max_region_interior is recomputed by a full enumeration on `kernel`.
KernelStats kernel_report(const Instance &original, const Instance &kernel, const FixpointReport &report,
                          const RegionOptions &regions = {});

// Largest strictly-interior vertex count over all maximal candidate regions.
int max_region_interior(const Instance &instance, const RegionOptions &regions = {});

// One flat key=value line, no timings, so it is reproducible byte for byte.
std::string format_stats_line(const KernelStats &stats);

}  // namespace pvds
