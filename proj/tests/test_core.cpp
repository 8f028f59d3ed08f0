#include "doctest.h"

#include "cjs/instance.hpp"
#include "cjs/json_io.hpp"
#include "cjs/rng.hpp"
#include "cjs/schedule.hpp"
#include "testutil.hpp"

using namespace cjs;

namespace {

Instance small_instance() {
  Instance inst;
  inst.n_jobs = 3;
  inst.n_machines = 2;
  inst.T = 6;
  inst.p = {2, 3, 4};
  inst.w = {1, 2, 3};
  inst.r = {5, 1, 2};
  inst.conflicts = {{0, 1}};
  inst.check();
  return inst;
}

Schedule assign_all(const std::vector<std::pair<int, int64_t>>& slots) {
  Schedule s;
  for (auto [mach, start] : slots) s.assignment.push_back(Assignment{mach, start});
  return s;
}

bool has_violation(const ValidationReport& report, Violation kind) {
  for (const auto& e : report.entries)
    if (e.kind == kind) return true;
  return false;
}

}  // namespace

TEST_CASE("objective names round-trip") {
  for (Objective obj : {Objective::MaxSum, Objective::MinSum, Objective::MinMax})
    CHECK(objective_from_name(objective_name(obj)) == obj);
  CHECK(!objective_from_name("makespan").has_value());
}

TEST_CASE("instance validation rejects malformed data") {
  Instance inst = small_instance();
  CHECK_NOTHROW(inst.check());

  Instance bad = inst;
  bad.p[1] = 0;
  CHECK_THROWS_AS(bad.check(), std::invalid_argument);

  bad = inst;
  bad.conflicts.push_back({1, 1});
  CHECK_THROWS_AS(bad.check(), std::invalid_argument);

  bad = inst;
  bad.conflicts.push_back({0, 3});
  CHECK_THROWS_AS(bad.check(), std::invalid_argument);

  bad = inst;
  bad.conflicts.push_back({1, 0});  // duplicate of (0, 1)
  CHECK_THROWS_AS(bad.check(), std::invalid_argument);

  bad = inst;
  bad.n_machines = 0;
  CHECK_THROWS_AS(bad.check(), std::invalid_argument);

  Instance maxsum_needs_T = inst;
  maxsum_needs_T.T.reset();
  CHECK_NOTHROW(maxsum_needs_T.check_for(Objective::MinMax));
  CHECK_THROWS_AS(maxsum_needs_T.check_for(Objective::MaxSum), std::invalid_argument);
}

TEST_CASE("feasible schedule evaluates under all three objectives") {
  Instance inst = small_instance();
  // Machine 0 runs job 0 then job 2 back to back; job 1 waits out its
  // conflict with job 0 on the other machine.
  Schedule s = assign_all({{0, 0}, {1, 2}, {0, 2}});
  CHECK(validate_schedule(inst, s, Objective::MinMax).feasible());
  CHECK(evaluate(inst, s, Objective::MinMax) == 6);
  CHECK(evaluate(inst, s, Objective::MinSum) == 1 * 2 + 2 * 5 + 3 * 6);
  CHECK(evaluate(inst, s, Objective::MaxSum) == 5 + 1 + 2);
}

TEST_CASE("half-open intervals: touching is allowed, overlap is not") {
  Instance inst = small_instance();

  Schedule touching = assign_all({{0, 0}, {1, 2}, {1, 5}});
  CHECK(validate_schedule(inst, touching, Objective::MinMax).feasible());

  // Conflict pair (0, 1) overlapping across machines.
  Schedule conflict = assign_all({{0, 0}, {1, 1}, {0, 2}});
  ValidationReport report = validate_schedule(inst, conflict, Objective::MinMax);
  CHECK(!report.feasible());
  CHECK(has_violation(report, Violation::ConflictOverlap));

  // Same machine, overlapping intervals.
  Schedule overlap = assign_all({{0, 0}, {1, 2}, {0, 1}});
  report = validate_schedule(inst, overlap, Objective::MinMax);
  CHECK(!report.feasible());
  CHECK(has_violation(report, Violation::MachineOverlap));

  CHECK_THROWS_AS(evaluate(inst, overlap, Objective::MinMax), InfeasibleScheduleError);
}

TEST_CASE("deadline applies to the profit objective only") {
  Instance inst = small_instance();
  Schedule late = assign_all({{0, 0}, {1, 2}, {0, 3}});  // job 2 ends at 7 > T = 6
  CHECK(validate_schedule(inst, late, Objective::MinMax).feasible());
  CHECK(validate_schedule(inst, late, Objective::MinSum).feasible());
  ValidationReport report = validate_schedule(inst, late, Objective::MaxSum);
  CHECK(has_violation(report, Violation::Deadline));
}

TEST_CASE("rejection bookkeeping") {
  Instance inst = small_instance();

  Schedule r;
  r.assignment = {Assignment{0, 0}, Assignment{1, 2}, std::nullopt};
  r.rejected = {2};
  CHECK(validate_schedule(inst, r, Objective::MaxSum).feasible());
  CHECK(evaluate(inst, r, Objective::MaxSum) == 5 + 1);
  // The same split is incomplete for the completion-time objectives.
  CHECK(has_violation(validate_schedule(inst, r, Objective::MinSum), Violation::Malformed));

  Schedule both = r;
  both.rejected = {1, 2};  // job 1 assigned and rejected
  CHECK(has_violation(validate_schedule(inst, both, Objective::MaxSum),
                      Violation::DuplicateAssignment));

  Schedule neither = r;
  neither.rejected = {};
  CHECK(has_violation(validate_schedule(inst, neither, Objective::MaxSum),
                      Violation::Malformed));
}

TEST_CASE("makespan lower bound tracks load, length, and cliques") {
  Instance inst = small_instance();
  CHECK(minmax_lower_bound(inst) == 5);  // clique {0, 1}: 2 + 3 = 5 = ceil(9/2)

  Instance clique = inst;
  clique.conflicts = {{0, 1}, {0, 2}, {1, 2}};
  CHECK(minmax_lower_bound(clique) == 9);  // everything serializes

  Instance longjob = inst;
  longjob.conflicts.clear();
  longjob.p = {1, 1, 8};
  CHECK(minmax_lower_bound(longjob) == 8);  // single longest job
}

TEST_CASE("instance JSON round-trips canonically") {
  SplitMix64 rng(7);
  for (int it = 0; it < 40; ++it) {
    Instance inst = testutil::sample_instance(rng);
    std::string text = instance_to_json(inst);
    Instance back = instance_from_json(text);
    CHECK(instance_to_json(back) == text);
    CHECK(back.n_jobs == inst.n_jobs);
    CHECK(back.n_machines == inst.n_machines);
    CHECK(back.p == inst.p);
    CHECK(back.w == inst.w);
    CHECK(back.r == inst.r);
    CHECK(back.conflicts == inst.conflicts);
    CHECK(back.T == inst.T);
  }
}

TEST_CASE("schedule JSON round-trips, rejected list included") {
  Instance inst = small_instance();
  Schedule s;
  s.assignment = {Assignment{0, 0}, std::nullopt, Assignment{1, 3}};
  s.rejected = {1};
  std::string text = schedule_to_json(s);
  Schedule back = schedule_from_json(text, inst.n_jobs);
  CHECK(schedule_to_json(back) == text);
  REQUIRE(back.assignment.size() == 3);
  CHECK(back.assignment[0]->machine == 0);
  CHECK(!back.assignment[1].has_value());
  CHECK(back.assignment[2]->start == 3);
  CHECK(back.rejected == std::vector<int>{1});
}

TEST_CASE("splitmix stream is stable across runs") {
  SplitMix64 rng(42);
  CHECK(rng.next() == UINT64_C(13679457532755275413));
  CHECK(rng.next() == UINT64_C(2949826092126892291));
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
}
