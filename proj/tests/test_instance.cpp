#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "pvds/events.hpp"
#include "pvds/instance.hpp"

using namespace pvds;
using pvds::test::graph;

TEST_CASE("validate accepts a well-formed triangle") {
  Instance t = test::with_demand(test::cycle(3), 1);
  t.set_budget(1);
  CHECK(validate(t).empty());
}

TEST_CASE("validate reports self-loops") {
  Instance inst(2);
  inst.add_edge(1, 1);
  auto problems = validate(inst);
  REQUIRE_FALSE(problems.empty());
  CHECK(std::count(problems.begin(), problems.end(), "self-loop at 1") == 1);
}

TEST_CASE("validate reports K5 edge count") {
  auto problems = validate(test::complete(5));
  CHECK(std::find(problems.begin(), problems.end(), "m > 3n-6") != problems.end());
}

TEST_CASE("validate: demand above n-1 only matters at construction") {
  Instance inst = graph(2, {{0, 1}}, {2, 0});
  CHECK_FALSE(validate(inst, ValidationScope::Construction).empty());
  CHECK(validate(inst, ValidationScope::Structure).empty());
}

TEST_CASE("validate catches duplicate edges") {
  Instance inst(3);
  inst.add_edge(0, 1);
  inst.add_edge(0, 1);
  CHECK_FALSE(validate(inst).empty());
}

TEST_CASE("dominates: star center covers demand-1 leaves") {
  Instance star = graph(4, {{0, 1}, {0, 2}, {0, 3}}, {0, 1, 1, 1});
  const VertexSet a{0}, b{1, 2, 3};
  CHECK(dominates(star, a, b));
}

TEST_CASE("dominates: one neighbor is not enough for demand 2") {
  Instance path = graph(3, {{0, 1}, {1, 2}}, {0, 2, 0});
  const VertexSet a{0}, b{1};
  CHECK_FALSE(dominates(path, a, b));
}

TEST_CASE("dominates: members of A need nothing") {
  Instance inst = graph(4, {}, {3});
  const VertexSet a{0};
  CHECK(dominates(inst, a, a));
}

TEST_CASE("dominates is monotone in A") {
  Instance inst = graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, {1, 2, 1, 2, 1});
  const VertexSet all = inst.vertices();
  for (unsigned mask = 0; mask < 32; ++mask)
    for (unsigned sup = mask; sup < 32; sup = (sup + 1) | mask) {
      VertexSet a, a2;
      for (int v = 0; v < 5; ++v) {
        if (mask >> v & 1) a.push_back(v);
        if (sup >> v & 1) a2.push_back(v);
      }
      if (dominates(inst, a, all)) CHECK(dominates(inst, a2, all));
      if (sup == 31) break;
    }
}

TEST_CASE("force_into_solution on a star center") {
  Instance star = graph(4, {{0, 1}, {0, 2}, {0, 3}}, {4, 1, 0, 2}, 2);
  ReductionEvent e = force_into_solution(star, 0);
  CHECK_FALSE(star.contains(0));
  CHECK(star.demand(1) == 0);
  CHECK(star.demand(2) == 0);
  CHECK(star.demand(3) == 1);
  CHECK(star.budget() == 1);
  CHECK(star.status() == Status::Open);
  CHECK(e.demand_deltas.count(2) == 0);  // clamped change of 0 is not recorded
  CHECK(e.budget_delta == -1);
}

TEST_CASE("force_into_solution with exhausted budget decides NO") {
  Instance inst(1, 0);
  force_into_solution(inst, 0);
  CHECK(inst.vertex_count() == 0);
  CHECK(inst.budget() == -1);
  CHECK(inst.status() == Status::DecidedNo);
}

TEST_CASE("force_into_solution of a forbidden vertex decides NO") {
  Instance inst = graph(2, {{0, 1}}, {0, 0}, 3);
  inst.set_forbidden(0);
  force_into_solution(inst, 0);
  CHECK(inst.status() == Status::DecidedNo);
}

TEST_CASE("neighborhood splits by demand") {
  Instance path = graph(3, {{0, 1}, {1, 2}}, {0, 0, 2});
  NeighborhoodView nv = neighborhood(path, 1);
  CHECK(nv.high == VertexSet{2});
  CHECK(nv.low == VertexSet{0});
  CHECK(nv.high_closed == VertexSet{1, 2});
  CHECK(nv.closed == VertexSet{0, 1, 2});
}

TEST_CASE("neighborhood of an isolated vertex") {
  Instance inst(1);
  NeighborhoodView nv = neighborhood(inst, 0);
  CHECK(nv.open.empty());
  CHECK(nv.high.empty());
  CHECK(nv.low.empty());
  CHECK(nv.closed == VertexSet{0});
  CHECK(nv.high_closed == VertexSet{0});
}

TEST_CASE("neighborhood in K4 with unit demands") {
  Instance k4 = test::with_demand(test::complete(4), 1);
  NeighborhoodView nv = neighborhood(k4, 0);
  CHECK(nv.high == VertexSet{1, 2, 3});
  CHECK(nv.low.empty());
}

TEST_CASE("unknown vertices are rejected") {
  Instance inst(3);
  inst.remove_vertex(1);
  CHECK_THROWS_AS(inst.require(1), UnknownVertex);
  CHECK_THROWS_AS(inst.require(7), UnknownVertex);
  CHECK_THROWS_AS(neighborhood(inst, 1), UnknownVertex);
}

TEST_CASE("removal keeps ids stable") {
  Instance inst = graph(4, {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1, 1});
  inst.remove_vertex(1);
  CHECK(inst.vertex_count() == 3);
  CHECK(inst.edge_count() == 1);
  CHECK(inst.vertices() == VertexSet{0, 2, 3});
  CHECK(inst.adjacent(2, 3));
  CHECK(inst.demand(3) == 1);
}

TEST_CASE("replay reproduces a recorded event") {
  Instance a = graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {2, 1, 0, 1}, 2);
  Instance b = a;
  EventRecorder rec(a, RuleId::R11);
  rec.remove_edge(0, 1);
  rec.change_demand(0, -1);
  rec.change_demand(2, -1);  // clamped to no change
  rec.color_blue(3);
  rec.remove_vertex(2);
  rec.change_budget(-1);
  ReductionEvent e = rec.take();
  CHECK(e.demand_deltas.size() == 1);
  replay(b, e);
  CHECK(a == b);
}
