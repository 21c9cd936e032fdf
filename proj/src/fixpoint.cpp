#include <optional>
#include <stdexcept>

#include "pvds/planarity.hpp"
#include "pvds/regions.hpp"
#include "pvds/rules.hpp"

namespace pvds {

Status settle(Instance &instance) {
  if (instance.status() == Status::Open && instance.total_demand() == 0 && instance.budget() >= 0)
    instance.set_status(Status::DecidedYes);
  return instance.status();
}

long long potential(const Instance &instance) {
  const long long n = instance.vertex_count();
  return 2 * n + instance.edge_count() + instance.total_demand() + (n - instance.forbidden_count());
}

FixpointReport run_fixpoint(Instance &instance, const FixpointOptions &options) {
  FixpointReport report;
  report.certificate_applied = options.kernel_certificate && options.enable_region_rules;

  // Rules apply their events in batches. The hook must see the instance
  // after each single event, so a shadow copy replays them one at a time.
  std::optional<Instance> shadow;
  if (options.on_event) shadow = instance;
  auto record = [&](std::vector<ReductionEvent> &&events) {
    for (auto &e : events) {
      ++report.rule_fire_counts[static_cast<int>(e.rule)];
      if (shadow) {
        replay(*shadow, e);
        options.on_event(*shadow, e);
      }
      report.events.push_back(std::move(e));
    }
    if (shadow && !(*shadow == instance)) throw std::logic_error("event log does not replay to the live instance");
  };
  auto decided_no = [&] { return instance.status() == Status::DecidedNo; };

  // Planarity is a precondition of every rule; refuse early.
  (void)embed(instance);

  while (!decided_no()) {
    if (options.max_rounds > 0 && report.rounds >= options.max_rounds) {
      report.hit_max_rounds = true;
      break;
    }
    ++report.rounds;

    bool fired = true;
    while (fired && !decided_no()) {
      fired = false;
      for (RuleId rule : kLocalRuleOrder) {
        auto events = apply_rule(instance, rule);
        if (events.empty()) continue;
        record(std::move(events));
        fired = true;
        break;
      }
    }
    if (decided_no() || !options.enable_region_rules) break;

    const RotationSystem rs = embed(instance);
    RegionScan scan = enumerate_all_regions(instance, rs, options.regions);
    report.regions_examined += scan.examined;
    report.region_cap_hit |= scan.capped;
    bool colored = false;
    for (const CandidateRegion &region : scan.regions) {
      auto events = apply_region_rules(instance, region);
      colored |= !events.empty();
      record(std::move(events));
    }
    if (!colored) break;
  }

  if (report.region_cap_hit) report.certificate_applied = false;
  if (!decided_no() && settle(instance) == Status::Open && report.certificate_applied && !report.hit_max_rounds &&
      static_cast<long long>(instance.vertex_count()) > static_cast<long long>(kKernelFactor) * instance.budget()) {
    EventRecorder rec(instance, RuleId::KernelBound);
    rec.decide(Status::DecidedNo);
    record({rec.take()});
  }

  report.final_status = instance.status();
  report.final_n = instance.vertex_count();
  report.final_m = instance.edge_count();
  report.final_k = instance.budget();
  return report;
}

}  // namespace pvds
