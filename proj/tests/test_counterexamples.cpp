// Instances on which the rule set does not meet its stated ceilings. They
// stay here as regression artifacts; see README, "Known limitations".
#include <doctest.h>

#include "pvds/harness.hpp"
#include "pvds/io.hpp"
#include "pvds/rules.hpp"
#include "pvds/solver.hpp"
#include "pvds/stats.hpp"

using namespace pvds;

namespace {

Instance load(const char *name) { return read_instance_file(std::string(PVDS_TEST_DATA_DIR) + "/" + name); }

const VertexSet kHubs{0, 1};

}  // namespace

TEST_CASE("K2,t: region rules are sound on small members") {
  for (int t = 3; t <= 10; ++t) {
    Instance g(t + 2, 2);
    for (int i = 2; i < t + 2; ++i) {
      g.add_edge(0, i);
      g.add_edge(1, i);
      g.set_demand(i, 2);
    }
    SoundnessReport r = check_soundness({g, "K2," + std::to_string(t)}, {});
    CHECK(r.violations.empty());
  }
}

TEST_CASE("K2,18 keeps a 16-vertex maximal region after full reduction") {
  Instance g = load("k2_18_region.pvds");
  REQUIRE(verify_solution(g, kHubs));
  Instance kernel = g;
  FixpointReport r = run_fixpoint(kernel);
  CHECK(r.final_status == Status::Open);
  CHECK_FALSE(r.region_cap_hit);
  // Ceiling is 15 strictly-interior vertices.
  CHECK(max_region_interior(kernel) == 16);
}

TEST_CASE("K2,201 is a fully reduced YES instance larger than 101k") {
  Instance g = load("k2_201_certificate.pvds");
  REQUIRE(verify_solution(g, kHubs));

  FixpointOptions off;
  off.kernel_certificate = false;
  Instance kernel = g;
  FixpointReport r = run_fixpoint(kernel, off);
  CHECK(r.final_status == Status::Open);
  CHECK_FALSE(r.region_cap_hit);
  CHECK(kernel.vertex_count() > kKernelFactor * kernel.budget());
  CHECK(verify_solution(kernel, kHubs));

  // With the certificate on, the size bound therefore rejects a YES instance.
  Instance certified = g;
  CHECK(run_fixpoint(certified).final_status == Status::DecidedNo);
}
