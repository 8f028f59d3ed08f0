#include "doctest.h"

#include "cjs/binary_search.hpp"
#include "cjs/oracle.hpp"
#include "cjs/rng.hpp"
#include "cjs/solver.hpp"
#include "testutil.hpp"

using namespace cjs;

TEST_CASE("probe backend names round-trip") {
  for (ProbeBackend b : {ProbeBackend::Native, ProbeBackend::F1, ProbeBackend::F3})
    CHECK(probe_backend_from_name(probe_backend_name(b)) == b);
  CHECK(!probe_backend_from_name("f2").has_value());
}

TEST_CASE("horizon search equals direct optimization") {
  SplitMix64 rng(120);
  for (int it = 0; it < 40; ++it) {
    Instance inst = testutil::sample_instance(rng);
    int64_t direct = *solve(inst, Objective::MinMax).incumbent;
    SolveResult bs = binary_search_minmax(inst);
    REQUIRE(bs.status == SolveStatus::Optimal);
    CHECK(*bs.incumbent == direct);
    CHECK(bs.bound == static_cast<double>(direct));
    CHECK(bs.gap == 0);
    REQUIRE(bs.schedule.has_value());
    CHECK(evaluate(inst, *bs.schedule, Objective::MinMax) == direct);
    CHECK(bs.stats.iterations <= binary_search_max_iterations(inst));
    CHECK(bs.stats.iterations >= 1);
  }
}

TEST_CASE("iteration ceiling is the log of the initial interval") {
  Instance inst;
  inst.n_jobs = 3;
  inst.n_machines = 2;
  inst.p = {4, 4, 4};
  inst.w = {1, 1, 1};
  inst.r = {1, 1, 1};
  // Interval [ceil(12/2), 12] = [6, 12]: width 7 -> at most ceil(log2 7) + 1 = 4.
  CHECK(binary_search_max_iterations(inst) == 4);
  SolveResult bs = binary_search_minmax(inst);
  CHECK(*bs.incumbent == 8);
  CHECK(bs.stats.iterations <= 4);
}

TEST_CASE("empty instance needs no probes") {
  Instance inst;
  inst.n_jobs = 0;
  inst.n_machines = 3;
  SolveResult bs = binary_search_minmax(inst);
  CHECK(bs.status == SolveStatus::Optimal);
  CHECK(*bs.incumbent == 0);
  CHECK(bs.stats.iterations == 0);
}

TEST_CASE("external probe backends need a command") {
  Instance inst;
  inst.n_jobs = 1;
  inst.n_machines = 1;
  inst.p = {2};
  inst.w = {1};
  inst.r = {1};
  BinarySearchConfig cfg;
  cfg.backend = ProbeBackend::F1;
  CHECK_THROWS_AS(binary_search_minmax(inst, cfg), std::invalid_argument);
}

TEST_CASE("an unknown probe degrades the claim") {
  Instance inst;
  inst.n_jobs = 4;
  inst.n_machines = 2;
  inst.p = {3, 4, 5, 6};
  inst.w = {1, 1, 1, 1};
  inst.r = {1, 1, 1, 1};
  BinarySearchConfig cfg;
  cfg.backend = ProbeBackend::F1;
  cfg.solver_command = "false";  // exits nonzero: every probe is Unknown
  SolveResult bs = binary_search_minmax(inst, cfg);
  CHECK(bs.status == SolveStatus::Unknown);
  CHECK(!bs.incumbent.has_value());
  CHECK(bs.bound == 9);  // ceil(18 / 2): the lower end was never disproven
  CHECK(bs.stats.iterations == 1);
  CHECK(bs.note.find("unknown") != std::string::npos);
}

TEST_CASE("model-probe backends agree with the native answer") {
  std::string cmd = "python3 " + testutil::tools_path("lp_solve.py");
  SplitMix64 rng(121);
  for (int it = 0; it < 2; ++it) {
    Instance inst = testutil::sample_instance(rng);
    int64_t direct = *solve(inst, Objective::MinMax).incumbent;
    for (ProbeBackend backend : {ProbeBackend::F1, ProbeBackend::F3}) {
      BinarySearchConfig cfg;
      cfg.backend = backend;
      cfg.solver_command = cmd;
      SolveResult bs = binary_search_minmax(inst, cfg);
      REQUIRE(bs.status == SolveStatus::Optimal);
      CHECK(*bs.incumbent == direct);
      CHECK(bs.stats.iterations <= binary_search_max_iterations(inst));
    }
  }
}
