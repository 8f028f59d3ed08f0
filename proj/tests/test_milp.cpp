#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cjs/external_solver.hpp"
#include "cjs/formulations.hpp"
#include "cjs/linear_model.hpp"
#include "cjs/generator.hpp"
#include "cjs/oracle.hpp"
#include "cjs/rng.hpp"
#include "testutil.hpp"

using namespace cjs;
namespace fs = std::filesystem;

namespace {

const Formulation kForms[] = {Formulation::F1, Formulation::F2, Formulation::F3};
const Objective kObjs[] = {Objective::MaxSum, Objective::MinSum, Objective::MinMax};

Instance frozen_instance() {
  SplitMix64 rng(2025);
  return testutil::sample_instance(rng);  // 4 jobs, 1 machine, T = 1, 3 conflicts
}

int64_t family_rows(const ModelSize& size, const std::string& family) {
  for (const auto& [name, rows] : size.rows_by_family)
    if (name == family) return rows;
  return 0;
}

// Temporary directory that cleans up after itself.
struct TempDir {
  fs::path path;
  TempDir() {
    char tmpl[] = "/tmp/cjs-test.XXXXXX";
    path = mkdtemp(tmpl);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string fake_solver(const TempDir& dir, const std::string& name,
                        const std::string& body) {
  fs::path script = dir.path / name;
  testutil::write_text(script.string(), "#!/bin/sh\n" + body + "\n");
  fs::permissions(script, fs::perms::owner_all);
  return script.string();
}

}  // namespace

TEST_CASE("model building is deterministic, LP text byte for byte") {
  Instance inst = frozen_instance();
  for (Formulation f : kForms)
    for (Objective obj : kObjs) {
      LinearModel a = build_model(inst, f, obj);
      LinearModel b = build_model(inst, f, obj);
      CHECK(export_lp(a) == export_lp(b));
    }
}

TEST_CASE("LP text structure") {
  Instance inst = frozen_instance();
  std::string lp = export_lp(build_model(inst, Formulation::F2, Objective::MaxSum));
  CHECK(lp.find("\\ f2 maxsum jobs=4 machines=1") == 0);
  CHECK(lp.find("Maximize") != std::string::npos);
  CHECK(lp.find("Subject To") != std::string::npos);
  CHECK(lp.find("Binaries") != std::string::npos);
  CHECK(lp.rfind("End\n") == lp.size() - 4);
  CHECK(lp.find("conf_0_1:") != std::string::npos);

  std::string lp_min = export_lp(build_model(inst, Formulation::F1, Objective::MinSum));
  CHECK(lp_min.find("Minimize") != std::string::npos);
}

TEST_CASE("frozen model sizes for one instance") {
  Instance inst = frozen_instance();
  struct Row {
    Formulation f;
    Objective obj;
    int64_t vars, cons;
  };
  const Row rows[] = {
      {Formulation::F1, Objective::MaxSum, 12, 23},
      {Formulation::F1, Objective::MinSum, 27, 53},
      {Formulation::F1, Objective::MinMax, 28, 57},
      {Formulation::F2, Objective::MaxSum, 24, 35},
      {Formulation::F2, Objective::MinSum, 24, 31},
      {Formulation::F2, Objective::MinMax, 25, 35},
      {Formulation::F3, Objective::MaxSum, 12, 20},
      {Formulation::F3, Objective::MinSum, 24, 68},
      {Formulation::F3, Objective::MinMax, 25, 72},
  };
  for (const Row& row : rows) {
    ModelSize size = model_size(build_model(inst, row.f, row.obj));
    CHECK(size.variables == row.vars);
    CHECK(size.constraints == row.cons);
  }
}

TEST_CASE("size accounting: closed forms versus enumeration") {
  SplitMix64 rng(310);
  for (int it = 0; it < 10; ++it) {
    Instance inst = testutil::sample_instance(rng);
    int64_t J = inst.n_jobs, M = inst.n_machines;
    int64_t C = static_cast<int64_t>(inst.conflicts.size());

    ModelSize f2 = model_size(build_model(inst, Formulation::F2, Objective::MaxSum));
    // The pairwise-ordering variable formula is exact.
    REQUIRE(f2.formula_variables.has_value());
    CHECK(*f2.formula_variables == J * J + M * J + J);
    CHECK(f2.variables == *f2.formula_variables);
    // Its stated row count includes the vacuous diagonal of the ordering
    // grid; the enumeration leaves those J + J*M rows out.
    REQUIRE(f2.formula_constraints.has_value());
    CHECK(*f2.formula_constraints == J * J + J * J * M + C + 2 * J);
    CHECK(f2.constraints == *f2.formula_constraints - J - J * M);

    ModelSize f1 = model_size(build_model(inst, Formulation::F1, Objective::MaxSum));
    LinearModel m1 = build_model(inst, Formulation::F1, Objective::MaxSum);
    int64_t K = m1.positions;
    REQUIRE(f1.formula_variables.has_value());
    CHECK(f1.variables == *f1.formula_variables);
    CHECK(f1.variables == J * M * K + J + M * K + C);
    // The stated row count misses the two completion-linking families
    // (J*M*K rows each) and double-counts nothing else; enumeration is
    // authoritative and differs by exactly J*M*K - M.
    REQUIRE(f1.formula_constraints.has_value());
    CHECK(*f1.formula_constraints == 2 * J + 2 * M * K + J * M * K + 2 * C);
    CHECK(f1.constraints == *f1.formula_constraints + J * M * K - M);
  }
}

TEST_CASE("size accounting: horizon scaling") {
  Instance inst;
  inst.n_jobs = 4;
  inst.n_machines = 2;
  inst.T = 8;
  inst.p = {2, 3, 2, 4};
  inst.w = {1, 2, 3, 4};
  inst.r = {4, 3, 2, 1};
  inst.conflicts = {{0, 1}, {2, 3}};
  inst.check();

  Instance doubled = inst;
  doubled.T = 16;

  // Time-indexed: every per-slot family doubles; only the per-job families
  // (len, and tmax under MinMax) are flat.
  for (Objective obj : kObjs) {
    ModelSize at_T = model_size(build_model(inst, Formulation::F3, obj));
    ModelSize at_2T = model_size(build_model(doubled, Formulation::F3, obj));
    if (obj != Objective::MaxSum) continue;  // MinSum/MinMax horizons track sum p, not T
    int64_t flat = family_rows(at_T, "len") + family_rows(at_T, "tmax");
    CHECK(at_2T.constraints == 2 * at_T.constraints - flat);
    for (const char* family : {"machcap", "jobcap", "startlb", "endub", "conf"})
      CHECK(family_rows(at_2T, family) == 2 * family_rows(at_T, family));
  }

  // Pairwise-ordering: the deadline moves coefficients, never counts.
  ModelSize f2_T = model_size(build_model(inst, Formulation::F2, Objective::MaxSum));
  ModelSize f2_2T = model_size(build_model(doubled, Formulation::F2, Objective::MaxSum));
  CHECK(f2_T.variables == f2_2T.variables);
  CHECK(f2_T.constraints == f2_2T.constraints);
}

TEST_CASE("oracle-optimal schedules embed cleanly into all nine models") {
  SplitMix64 rng(311);
  for (int it = 0; it < 12; ++it) {
    Instance inst = testutil::sample_instance(rng);
    for (Objective obj : kObjs) {
      OracleResult ref = brute_force(inst, obj);
      for (Formulation f : kForms) {
        LinearModel model = build_model(inst, f, obj);
        VarAssignment asg = embed_schedule(model, inst, ref.schedule);
        ModelCheck check = check_assignment(model, asg);
        INFO(formulation_name(f) << " " << objective_name(obj));
        CHECK(check.violations.empty());
        CHECK(check.feasible);
        CHECK(check.canonical == doctest::Approx(static_cast<double>(ref.optimum)));

        Schedule back = reconstruct_schedule(model, inst, asg);
        CHECK(validate_schedule(inst, back, obj).feasible());
        CHECK(evaluate(inst, back, obj) == ref.optimum);
      }
    }
  }
}

TEST_CASE("reconstruction keeps machine choices where the model fixes them") {
  SplitMix64 rng(312);
  Instance inst = testutil::sample_instance(rng);
  OracleResult ref = brute_force(inst, Objective::MinMax);
  for (Formulation f : {Formulation::F1, Formulation::F2}) {
    LinearModel model = build_model(inst, f, Objective::MinMax);
    Schedule back = reconstruct_schedule(model, inst, embed_schedule(model, inst, ref.schedule));
    for (int j = 0; j < inst.n_jobs; ++j) {
      CHECK(back.assignment[j]->machine == ref.schedule.assignment[j]->machine);
      CHECK(back.assignment[j]->start == ref.schedule.assignment[j]->start);
    }
  }
}

TEST_CASE("check_assignment flags domain and row violations") {
  Instance inst = frozen_instance();
  LinearModel model = build_model(inst, Formulation::F2, Objective::MinMax);
  OracleResult ref = brute_force(inst, Objective::MinMax);
  VarAssignment good = embed_schedule(model, inst, ref.schedule);

  VarAssignment fractional = good;
  fractional[model.vars[0].name] = 0.5;
  ModelCheck check = check_assignment(model, fractional);
  CHECK(!check.feasible);

  VarAssignment missing = good;
  missing.erase("s_0");
  CHECK_THROWS_AS(check_assignment(model, missing), std::invalid_argument);
}

TEST_CASE("embedding refuses infeasible schedules") {
  Instance inst;
  inst.n_jobs = 2;
  inst.n_machines = 2;
  inst.T = 6;
  inst.p = {2, 2};
  inst.w = {1, 1};
  inst.r = {1, 1};
  inst.conflicts = {{0, 1}};
  inst.check();
  LinearModel model = build_model(inst, Formulation::F2, Objective::MinMax);
  Schedule bad;
  bad.assignment = {Assignment{0, 0}, Assignment{1, 0}};  // conflict overlap
  CHECK_THROWS_AS(embed_schedule(model, inst, bad), InfeasibleScheduleError);
}

TEST_CASE("solver output parsing") {
  Instance inst = frozen_instance();
  LinearModel model = build_model(inst, Formulation::F3, Objective::MaxSum);
  VarAssignment asg;
  bool infeasible = false;
  std::string error;

  std::string name0 = model.vars[0].name;
  CHECK(parse_solver_output(model, "# comment\n\n" + name0 + " 0.9999999\n", &asg,
                            &infeasible, &error));
  CHECK(!infeasible);
  CHECK(asg[name0] == 1.0);  // snapped to the binary domain
  CHECK(asg[model.vars[1].name] == 0.0);

  CHECK(parse_solver_output(model, "INFEASIBLE\n", &asg, &infeasible, &error));
  CHECK(infeasible);

  CHECK(!parse_solver_output(model, "nosuchvar 1\n", &asg, &infeasible, &error));
  CHECK(error.find("unknown variable") != std::string::npos);

  CHECK(!parse_solver_output(model, name0 + "\n", &asg, &infeasible, &error));
  CHECK(error.find("missing value") != std::string::npos);
}

TEST_CASE("external bridge: checked feasible, declared infeasible, failures") {
  SplitMix64 rng(313);
  Instance inst = testutil::sample_instance(rng);
  OracleResult ref = brute_force(inst, Objective::MinMax);
  LinearModel model = build_model(inst, Formulation::F2, Objective::MinMax);

  TempDir dir;
  // A canned solver that replays the embedded optimum.
  std::ostringstream sol;
  for (const auto& [name, value] : embed_schedule(model, inst, ref.schedule))
    sol << name << " " << value << "\n";
  fs::path sol_path = dir.path / "canned.sol";
  testutil::write_text(sol_path.string(), sol.str());

  SolveResult res =
      solve_external(inst, model, fake_solver(dir, "replay.sh", "cat " + sol_path.string()));
  REQUIRE(res.status == SolveStatus::Feasible);
  CHECK(*res.incumbent == ref.optimum);
  REQUIRE(res.schedule.has_value());
  CHECK(validate_schedule(inst, *res.schedule, Objective::MinMax).feasible());

  res = solve_external(inst, model, fake_solver(dir, "inf.sh", "echo infeasible"));
  CHECK(res.status == SolveStatus::Infeasible);

  res = solve_external(inst, model, fake_solver(dir, "crash.sh", "exit 3"));
  CHECK(res.status == SolveStatus::Unknown);
  CHECK(res.note.find("status 3") != std::string::npos);

  res = solve_external(inst, model, fake_solver(dir, "garbage.sh", "echo not a solution"));
  CHECK(res.status == SolveStatus::Unknown);
  CHECK(!res.note.empty());

  // All-zero output satisfies no assignment row, so it must be rejected.
  res = solve_external(inst, model, fake_solver(dir, "zeros.sh", "true"));
  CHECK(res.status == SolveStatus::Unknown);
  CHECK(res.note.find("violates") != std::string::npos);
}

TEST_CASE("external bridge solves through the reference adapter") {
  Instance inst = generate_instance({5, 2, 8, 1, 2, 77});
  OracleResult ref = brute_force(inst, Objective::MinMax);
  LinearModel model = build_model(inst, Formulation::F3, Objective::MinMax);
  std::string cmd = "python3 " + testutil::tools_path("lp_solve.py");
  SolveResult res = solve_external(inst, model, cmd);
  REQUIRE(res.status == SolveStatus::Feasible);
  CHECK(*res.incumbent == ref.optimum);  // HiGHS lands on the optimum here
}
