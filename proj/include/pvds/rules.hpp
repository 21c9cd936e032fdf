#pragma once

#include <array>
#include <functional>
#include <vector>

#include "pvds/events.hpp"
#include "pvds/instance.hpp"
#include "pvds/regions.hpp"

namespace pvds {

// General-graph rules. Each returns the events it fired, one per atomic
// change, in the order they were applied. A rule that would need a
// forbidden vertex to be selectable stays silent for that witness.
std::vector<ReductionEvent> rule1(Instance &instance);
std::vector<ReductionEvent> rule2(Instance &instance);
std::vector<ReductionEvent> rule3(Instance &instance);
std::vector<ReductionEvent> rule4(Instance &instance);
std::vector<ReductionEvent> rule5(Instance &instance);
std::vector<ReductionEvent> rule9(Instance &instance);
std::vector<ReductionEvent> rule10(Instance &instance);
std::vector<ReductionEvent> rule11(Instance &instance);
std::vector<ReductionEvent> rule12(Instance &instance);
std::vector<ReductionEvent> rule13(Instance &instance);

// Local rules in the order the fixpoint tries them.
inline constexpr std::array<RuleId, 10> kLocalRuleOrder = {
    RuleId::R1, RuleId::R2, RuleId::R3, RuleId::R13, RuleId::R4,
    RuleId::R5, RuleId::R9, RuleId::R10, RuleId::R11, RuleId::R12,
};

std::vector<ReductionEvent> apply_rule(Instance &instance, RuleId rule);

// Size bound for fully reduced YES instances: n <= 101 k.
inline constexpr int kKernelFactor = 101;

struct FixpointOptions {
  bool kernel_certificate = true;
  bool enable_region_rules = true;
  long long max_rounds = 0;  // 0 = unlimited
  RegionOptions regions;
  // Invoked after every event; the soundness harness hooks in here.
  std::function<void(const Instance &, const ReductionEvent &)> on_event;
};

struct FixpointReport {
  std::vector<ReductionEvent> events;
  long long rounds = 0;
  Status final_status = Status::Open;
  int final_n = 0;
  int final_m = 0;
  int final_k = 0;
  std::array<long long, kRuleIdCount> rule_fire_counts{};
  long long regions_examined = 0;
  bool region_cap_hit = false;
  bool certificate_applied = false;  // certificate was active for this run
  bool hit_max_rounds = false;
};

// Marks an open instance DecidedYes once every demand is met within budget.
// run_fixpoint ends with this; it is not recorded as an event.
Status settle(Instance &instance);

// 2n + m + sum(d) + |V \ P|; every event strictly decreases it.
long long potential(const Instance &instance);

// Runs all rules to exhaustion. The kernel certificate is only honored when
// region rules are on and no enumeration cap was hit. Throws NonPlanar.
FixpointReport run_fixpoint(Instance &instance, const FixpointOptions &options = {});

}  // namespace pvds
