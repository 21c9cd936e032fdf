#include "pvds/stats.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "pvds/planarity.hpp"

namespace pvds {

int max_region_interior(const Instance &instance, const RegionOptions &regions) {
  if (instance.vertex_count() == 0) return 0;
  const RotationSystem rs = embed(instance);
  int best = 0;
  for (const auto &region : enumerate_all_regions(instance, rs, regions).regions)
    best = std::max(best, static_cast<int>(region.interior.size()));
  return best;
}

KernelStats kernel_report(const Instance &original, const Instance &kernel, const FixpointReport &report,
                          const RegionOptions &regions) {
  KernelStats s;
  s.n_before = original.vertex_count();
  s.m_before = original.edge_count();
  s.k_before = original.budget();
  s.n_after = kernel.vertex_count();
  s.m_after = kernel.edge_count();
  s.k_after = kernel.budget();
  s.status = kernel.status();
  for (const auto &e : report.events) s.blue_count += static_cast<long long>(e.newly_blue.size());
  s.rule_fire_counts = report.rule_fire_counts;
  s.rounds = report.rounds;
  s.event_count = static_cast<long long>(report.events.size());
  s.region_count_examined = report.regions_examined;
  s.region_cap_hit = report.region_cap_hit;
  s.max_region_interior = kernel.status() == Status::DecidedNo ? 0 : max_region_interior(kernel, regions);
  s.bound_ratio = static_cast<double>(s.n_after) / std::max(s.k_after, 1);
  return s;
}

std::string format_stats_line(const KernelStats &s) {
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%.4f", s.bound_ratio);
  std::ostringstream os;
  os << "n_before=" << s.n_before << " m_before=" << s.m_before << " k_before=" << s.k_before
     << " n_after=" << s.n_after << " m_after=" << s.m_after << " k_after=" << s.k_after
     << " status=" << to_string(s.status) << " blue=" << s.blue_count << " rounds=" << s.rounds
     << " events=" << s.event_count << " regions_examined=" << s.region_count_examined
     << " region_cap_hit=" << (s.region_cap_hit ? 1 : 0) << " max_region_interior=" << s.max_region_interior
     << " bound_ratio=" << ratio << " fires=";
  bool first = true;
  for (int r = 0; r < kRuleIdCount; ++r) {
    if (s.rule_fire_counts[r] == 0) continue;
    os << (first ? "" : ",") << to_string(rule_from_number(r)) << ':' << s.rule_fire_counts[r];
    first = false;
  }
  if (first) os << '-';
  return os.str();
}

}  // namespace pvds
