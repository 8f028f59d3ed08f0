#include "doctest.h"

#include "cjs/generator.hpp"
#include "cjs/oracle.hpp"
#include "cjs/rng.hpp"
#include "testutil.hpp"

using namespace cjs;

namespace {

Instance pair_instance(int machines, bool conflicting) {
  Instance inst;
  inst.n_jobs = 2;
  inst.n_machines = machines;
  inst.T = 10;
  inst.p = {2, 3};
  inst.w = {1, 3};
  inst.r = {1, 5};
  if (conflicting) inst.conflicts = {{0, 1}};
  inst.check();
  return inst;
}

}  // namespace

TEST_CASE("refuses instances beyond the enumeration guard") {
  Instance inst;
  inst.n_jobs = 9;
  inst.n_machines = 1;
  inst.p.assign(9, 1);
  inst.w.assign(9, 1);
  inst.r.assign(9, 1);
  CHECK_THROWS_AS(brute_force(inst, Objective::MinMax), std::invalid_argument);
  OracleLimits wide;
  wide.max_jobs = 9;
  CHECK_NOTHROW(brute_force(inst, Objective::MinMax, wide));
}

TEST_CASE("two jobs, one machine") {
  Instance inst = pair_instance(1, false);
  CHECK(brute_force(inst, Objective::MinMax).optimum == 5);
  // Weight-heavy job 1 first: 3*3 + 1*5 = 14 beats 1*2 + 3*5 = 17.
  CHECK(brute_force(inst, Objective::MinSum).optimum == 14);
  CHECK(brute_force(inst, Objective::MaxSum).optimum == 6);
}

TEST_CASE("a conflict forces serialization even on two machines") {
  Instance inst = pair_instance(2, true);
  CHECK(brute_force(inst, Objective::MinMax).optimum == 5);
  Instance free = pair_instance(2, false);
  CHECK(brute_force(free, Objective::MinMax).optimum == 3);
}

TEST_CASE("profit objective drops jobs that cannot meet the deadline") {
  Instance inst;
  inst.n_jobs = 2;
  inst.n_machines = 1;
  inst.T = 4;
  inst.p = {2, 3};
  inst.w = {1, 1};
  inst.r = {1, 5};
  inst.check();
  OracleResult res = brute_force(inst, Objective::MaxSum);
  CHECK(res.optimum == 5);  // {1} fits; {0, 1} needs 5 > T
  CHECK(res.schedule.rejected == std::vector<int>{0});

  inst.T = 5;
  CHECK(brute_force(inst, Objective::MaxSum).optimum == 6);
  inst.T = 1;
  OracleResult none = brute_force(inst, Objective::MaxSum);
  CHECK(none.optimum == 0);
  CHECK(none.schedule.rejected == std::vector<int>{0, 1});
}

TEST_CASE("oracle witnesses validate and reproduce the optimum") {
  SplitMix64 rng(404);
  for (int it = 0; it < 25; ++it) {
    Instance inst = testutil::sample_instance(rng);
    for (Objective obj : {Objective::MaxSum, Objective::MinSum, Objective::MinMax}) {
      OracleResult res = brute_force(inst, obj);
      CHECK(validate_schedule(inst, res.schedule, obj).feasible());
      CHECK(evaluate(inst, res.schedule, obj) == res.optimum);
      OracleResult again = brute_force(inst, obj);
      CHECK(again.optimum == res.optimum);
      CHECK(again.orientations == res.orientations);
    }
  }
}

TEST_CASE("frozen optima for fixed sampled instances") {
  SplitMix64 rng(2025);
  struct Expect {
    int64_t maxsum, minsum, minmax;
  };
  const Expect expected[] = {{8, 47, 4}, {15, 85, 7}, {7, 53, 5}};
  for (const Expect& e : expected) {
    Instance inst = testutil::sample_instance(rng);
    CHECK(brute_force(inst, Objective::MaxSum).optimum == e.maxsum);
    CHECK(brute_force(inst, Objective::MinSum).optimum == e.minsum);
    CHECK(brute_force(inst, Objective::MinMax).optimum == e.minmax);
  }
}

TEST_CASE("frozen optima for a generated cell") {
  Instance inst = generate_instance({6, 2, 10, 2, 1, 5});
  CHECK(brute_force(inst, Objective::MaxSum).optimum == 17);
  CHECK(brute_force(inst, Objective::MinSum).optimum == 84);
  CHECK(brute_force(inst, Objective::MinMax).optimum == 14);
}
