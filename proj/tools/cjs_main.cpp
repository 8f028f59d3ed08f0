// Command-line front end: gen / solve / export / check / bench.
//
// Exit codes: 0 success (solve: proven optimal), 2 infeasible or invalid
// input, 3 solve finished without a proof (feasible-only or unknown).

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cjs/bench.hpp"
#include "cjs/binary_search.hpp"
#include "cjs/external_solver.hpp"
#include "cjs/formulations.hpp"
#include "cjs/generator.hpp"
#include "cjs/json_io.hpp"
#include "cjs/linear_model.hpp"
#include "cjs/oracle.hpp"
#include "cjs/schedule.hpp"
#include "cjs/solver.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace cjs;

namespace {

Objective parse_objective(const std::string& name) {
  auto obj = objective_from_name(name);
  if (!obj) throw std::invalid_argument("unknown objective: " + name);
  return *obj;
}

Formulation parse_formulation(const std::string& name) {
  auto f = formulation_from_name(name);
  if (!f) throw std::invalid_argument("unknown formulation: " + name);
  return *f;
}

json violations_json(const ValidationReport& report) {
  json arr = json::array();
  for (const auto& entry : report.entries)
    arr.push_back({{"kind", violation_name(entry.kind)}, {"detail", entry.detail}});
  return arr;
}

json result_json(const SolveResult& res, Objective obj, const std::string& method,
                 double wall_s) {
  json j;
  j["status"] = solve_status_name(res.status);
  j["objective"] = objective_name(obj);
  j["method"] = method;
  j["incumbent"] = res.incumbent ? json(*res.incumbent) : json(nullptr);
  j["bound"] = std::isfinite(res.bound) ? json(res.bound) : json(nullptr);
  j["gap"] = res.gap;
  j["nodes"] = res.stats.nodes;
  j["iterations"] = res.stats.iterations;
  j["time_s"] = wall_s;
  if (!res.note.empty()) j["note"] = res.note;
  j["schedule"] = res.schedule ? json::parse(schedule_to_json(*res.schedule)) : json(nullptr);
  return j;
}

SolveResult run_method(const Instance& inst, const std::string& method, Objective obj,
                       const SolveConfig& scfg, const std::string& solver_command) {
  if (method == "native") return solve(inst, obj, scfg);
  if (method == "bs-native" || method == "bs-f1" || method == "bs-f3") {
    if (obj != Objective::MinMax)
      throw std::invalid_argument(method + " applies to the minmax objective only");
    BinarySearchConfig bs;
    bs.backend = method == "bs-native" ? ProbeBackend::Native
               : method == "bs-f1"     ? ProbeBackend::F1
                                       : ProbeBackend::F3;
    bs.probe = scfg;
    bs.solver_command = solver_command;
    return binary_search_minmax(inst, bs);
  }
  if (method == "f1" || method == "f2" || method == "f3") {
    LinearModel model = build_model(inst, parse_formulation(method), obj);
    return solve_external(inst, model, solver_command);
  }
  if (method == "oracle") {
    OracleResult ref = brute_force(inst, obj);
    SolveResult res;
    res.status = SolveStatus::Optimal;
    res.incumbent = ref.optimum;
    res.bound = static_cast<double>(ref.optimum);
    res.gap = 0;
    res.schedule = ref.schedule;
    res.stats.nodes = ref.orientations;
    return res;
  }
  throw std::invalid_argument("unknown method: " + method);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

// ---- gen ----------------------------------------------------------------

struct GenArgs {
  std::string out;
  uint64_t seed = 1;
  bool single = false;
  int n = 0, m = 0, alpha = 0, setting = 1;
  int64_t T = 0;
  std::vector<int> jobs, machines, alphas, settings;
  std::vector<int64_t> deadlines;
};

int cmd_gen(const GenArgs& a) {
  if (a.single) {
    if (a.n < 1 || a.m < 1 || a.T < 1)
      throw std::invalid_argument("--single needs --n, --m, and --T");
    GenParams params{a.n, a.m, a.T, a.alpha, a.setting, a.seed};
    Instance inst = generate_instance(params);
    std::string text = instance_to_json(inst);
    emit(text, a.out);
    if (!a.out.empty())
      std::cerr << "wrote " << instance_name(params) << " to " << a.out << "\n";
    return 0;
  }
  if (a.out.empty()) throw std::invalid_argument("--out DIR is required for suites");
  SuiteSpec spec;
  spec.master_seed = a.seed;
  if (!a.jobs.empty()) spec.jobs = a.jobs;
  if (!a.machines.empty()) spec.machines = a.machines;
  if (!a.deadlines.empty()) spec.capacities = a.deadlines;
  if (!a.alphas.empty()) spec.alphas = a.alphas;
  if (!a.settings.empty()) spec.settings = a.settings;
  std::vector<NamedInstance> suite = generate_suite(spec);
  fs::create_directories(a.out);
  for (const NamedInstance& item : suite)
    save_instance((fs::path(a.out) / (item.name + ".json")).string(), item.instance);
  std::cerr << "wrote " << suite.size() << " instances to " << a.out << "\n";
  return 0;
}

// ---- solve --------------------------------------------------------------

struct SolveArgs {
  std::string instance, objective, method = "native", solver_command, schedule_out;
  SolveConfig cfg;
};

int cmd_solve(const SolveArgs& a) {
  Instance inst = load_instance(a.instance);
  Objective obj = parse_objective(a.objective);
  inst.check_for(obj);
  auto t0 = std::chrono::steady_clock::now();
  SolveResult res = run_method(inst, a.method, obj, a.cfg, a.solver_command);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << result_json(res, obj, a.method, wall).dump(2) << "\n";
  if (!a.schedule_out.empty() && res.schedule) save_schedule(a.schedule_out, *res.schedule);
  switch (res.status) {
    case SolveStatus::Optimal: return 0;
    case SolveStatus::Infeasible: return 2;
    default: return 3;
  }
}

// ---- export -------------------------------------------------------------

struct ExportArgs {
  std::string instance, formulation, objective, out;
  std::optional<int64_t> horizon;
  bool size_only = false;
};

int cmd_export(const ExportArgs& a) {
  Instance inst = load_instance(a.instance);
  Objective obj = parse_objective(a.objective);
  inst.check_for(obj);
  LinearModel model = build_model(inst, parse_formulation(a.formulation), obj, a.horizon);
  if (a.size_only) {
    ModelSize size = model_size(model);
    json j;
    j["formulation"] = formulation_name(model.formulation);
    j["objective"] = objective_name(model.objective);
    j["variables"] = size.variables;
    j["constraints"] = size.constraints;
    json fams = json::array();
    for (const auto& [family, rows] : size.rows_by_family)
      fams.push_back({{"family", family}, {"rows", rows}});
    j["families"] = fams;
    j["formula_variables"] =
        size.formula_variables ? json(*size.formula_variables) : json(nullptr);
    j["formula_constraints"] =
        size.formula_constraints ? json(*size.formula_constraints) : json(nullptr);
    emit(j.dump(2) + "\n", a.out);
    return 0;
  }
  emit(export_lp(model), a.out);
  return 0;
}

// ---- check --------------------------------------------------------------

struct CheckArgs {
  std::string instance, objective, schedule, solution, formulation;
  std::optional<int64_t> horizon;
};

int cmd_check(const CheckArgs& a) {
  Instance inst = load_instance(a.instance);
  Objective obj = parse_objective(a.objective);
  inst.check_for(obj);
  json out;

  if (!a.solution.empty()) {
    // External solver output: parse against the model, check every row,
    // rebuild the schedule, and validate it against the instance.
    LinearModel model = build_model(inst, parse_formulation(a.formulation), obj, a.horizon);
    VarAssignment asg;
    bool infeasible = false;
    std::string error;
    if (!parse_solver_output(model, read_file(a.solution), &asg, &infeasible, &error)) {
      std::cerr << "error: " << error << "\n";
      return 2;
    }
    if (infeasible) {
      out["declared_infeasible"] = true;
      std::cout << out.dump(2) << "\n";
      return 2;
    }
    ModelCheck check = check_assignment(model, asg);
    out["rows_ok"] = check.feasible;
    out["row_violations"] = check.violations;
    out["objective_raw"] = check.objective;
    out["canonical"] = check.canonical;
    if (!check.feasible) {
      std::cout << out.dump(2) << "\n";
      return 2;
    }
    Schedule sched = reconstruct_schedule(model, inst, asg);
    ValidationReport report = validate_schedule(inst, sched, obj);
    out["feasible"] = report.feasible();
    out["violations"] = violations_json(report);
    if (report.feasible()) out["value"] = evaluate(inst, sched, obj);
    std::cout << out.dump(2) << "\n";
    return report.feasible() ? 0 : 2;
  }

  Schedule sched = load_schedule(a.schedule, inst.n_jobs);
  ValidationReport report = validate_schedule(inst, sched, obj);
  out["feasible"] = report.feasible();
  out["violations"] = violations_json(report);
  if (report.feasible()) {
    out["value"] = evaluate(inst, sched, obj);
    if (!a.formulation.empty()) {
      LinearModel model = build_model(inst, parse_formulation(a.formulation), obj, a.horizon);
      VarAssignment asg = embed_schedule(model, inst, sched);
      ModelCheck check = check_assignment(model, asg);
      out["model"] = {{"formulation", formulation_name(model.formulation)},
                      {"rows_ok", check.feasible},
                      {"row_violations", check.violations},
                      {"objective_raw", check.objective},
                      {"canonical", check.canonical}};
      if (!check.feasible) {
        std::cout << out.dump(2) << "\n";
        return 2;
      }
    }
  }
  std::cout << out.dump(2) << "\n";
  return report.feasible() ? 0 : 2;
}

// ---- bench --------------------------------------------------------------

struct BenchArgs {
  std::string dir, csv, objective = "minmax", solver_command;
  std::vector<std::string> methods = {"native"};
  uint64_t seed = 1;
  std::vector<int> jobs, machines, alphas, settings;
  std::vector<int64_t> deadlines;
  SolveConfig cfg;

  BenchArgs() { cfg.time_limit = 3600; }  // benchmark default; 0 = unlimited
};

int cmd_bench(const BenchArgs& a) {
  std::vector<BenchRun> runs;
  if (!a.dir.empty()) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(a.dir))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const fs::path& path : files)
      runs.push_back({path.stem().string(), load_instance(path.string())});
  } else {
    SuiteSpec spec;
    spec.master_seed = a.seed;
    if (!a.jobs.empty()) spec.jobs = a.jobs;
    if (!a.machines.empty()) spec.machines = a.machines;
    if (!a.deadlines.empty()) spec.capacities = a.deadlines;
    if (!a.alphas.empty()) spec.alphas = a.alphas;
    if (!a.settings.empty()) spec.settings = a.settings;
    for (NamedInstance& item : generate_suite(spec))
      runs.push_back({item.name, std::move(item.instance)});
  }
  if (runs.empty()) throw std::invalid_argument("no instances to benchmark");

  BenchConfig cfg;
  cfg.methods = a.methods;
  cfg.objective = parse_objective(a.objective);
  cfg.solve = a.cfg;
  cfg.solver_command = a.solver_command;
  std::vector<BenchRecord> records = run_bench(runs, cfg);
  if (!a.csv.empty()) write_file(a.csv, bench_csv(records));
  std::cout << bench_summary(records);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact scheduling of conflict jobs on parallel identical machines"};
  app.require_subcommand(1);

  const std::vector<std::string> objective_names = {"maxsum", "minsum", "minmax"};
  const std::vector<std::string> formulation_names = {"f1", "f2", "f3"};
  // `oracle` is the exhaustive reference solver; it stays behind a small
  // instance guard and reports an error row past it.
  const std::vector<std::string> method_names = {"native", "bs-native", "bs-f1",
                                                 "bs-f3",  "f1",        "f2",
                                                 "f3",     "oracle"};

  GenArgs gen;
  auto* cgen = app.add_subcommand("gen", "Generate benchmark instances");
  cgen->add_option("--out", gen.out, "Output directory (suite) or file (--single)");
  cgen->add_option("--seed", gen.seed, "Master seed")->capture_default_str();
  cgen->add_flag("--single", gen.single, "Generate one instance instead of a suite");
  cgen->add_option("--n", gen.n, "Jobs (--single)");
  cgen->add_option("--m", gen.m, "Machines (--single)");
  cgen->add_option("--T", gen.T, "Deadline / scale (--single)");
  cgen->add_option("--alpha", gen.alpha, "Conflict density factor (--single)");
  cgen->add_option("--setting", gen.setting, "Processing-time setting 1..3 (--single)");
  cgen->add_option("--jobs", gen.jobs, "Suite n values")->delimiter(',');
  cgen->add_option("--machines", gen.machines, "Suite m values")->delimiter(',');
  cgen->add_option("--deadlines", gen.deadlines, "Suite T values")->delimiter(',');
  cgen->add_option("--alphas", gen.alphas, "Suite alpha values")->delimiter(',');
  cgen->add_option("--settings", gen.settings, "Suite settings")->delimiter(',');

  SolveArgs sol;
  auto* csolve = app.add_subcommand("solve", "Solve an instance");
  csolve->add_option("--instance", sol.instance, "Instance JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  csolve->add_option("--objective", sol.objective, "maxsum | minsum | minmax")
      ->required()
      ->check(CLI::IsMember(objective_names));
  csolve->add_option("--method", sol.method, "Solution method")
      ->capture_default_str()
      ->check(CLI::IsMember(method_names));
  csolve->add_option("--time-limit", sol.cfg.time_limit, "Seconds, 0 = unlimited");
  csolve->add_option("--node-limit", sol.cfg.node_limit, "Nodes, 0 = unlimited");
  csolve->add_option("--gap", sol.cfg.gap_target, "Relative gap target");
  csolve->add_flag("--deterministic", sol.cfg.deterministic,
                   "Ignore the wall clock (node limits still apply)");
  csolve->add_option("--solver-command", sol.solver_command,
                     "External MILP command for f1/f2/f3/bs-f1/bs-f3");
  csolve->add_option("--schedule-out", sol.schedule_out, "Write the witness schedule here");

  ExportArgs exp;
  int64_t exp_horizon = -1;
  auto* cexport = app.add_subcommand("export", "Write a model as an LP file");
  cexport->add_option("--instance", exp.instance, "Instance JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  cexport->add_option("--formulation", exp.formulation, "f1 | f2 | f3")
      ->required()
      ->check(CLI::IsMember(formulation_names));
  cexport->add_option("--objective", exp.objective, "maxsum | minsum | minmax")
      ->required()
      ->check(CLI::IsMember(objective_names));
  cexport->add_option("--horizon", exp_horizon, "Override the model horizon");
  cexport->add_option("--out", exp.out, "Output file (default stdout)");
  cexport->add_flag("--size", exp.size_only, "Print size accounting instead of the LP");

  CheckArgs chk;
  int64_t chk_horizon = -1;
  auto* ccheck = app.add_subcommand("check", "Validate a schedule or a solver solution");
  ccheck->add_option("--instance", chk.instance, "Instance JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  ccheck->add_option("--objective", chk.objective, "maxsum | minsum | minmax")
      ->required()
      ->check(CLI::IsMember(objective_names));
  ccheck->add_option("--schedule", chk.schedule, "Schedule JSON file")
      ->check(CLI::ExistingFile);
  ccheck->add_option("--solution", chk.solution, "External solver output file")
      ->check(CLI::ExistingFile);
  ccheck->add_option("--formulation", chk.formulation,
                     "Verify against this model (required with --solution)")
      ->check(CLI::IsMember(formulation_names));
  ccheck->add_option("--horizon", chk_horizon, "Override the model horizon");

  BenchArgs ben;
  auto* cbench = app.add_subcommand("bench", "Run methods over an instance set");
  cbench->add_option("--dir", ben.dir, "Instance directory (default: generate a suite)")
      ->check(CLI::ExistingDirectory);
  cbench->add_option("--methods", ben.methods, "Methods to run")
      ->delimiter(',')
      ->check(CLI::IsMember(method_names));
  cbench->add_option("--objective", ben.objective, "maxsum | minsum | minmax")
      ->capture_default_str()
      ->check(CLI::IsMember(objective_names));
  cbench->add_option("--seed", ben.seed, "Master seed for generated suites")
      ->capture_default_str();
  cbench->add_option("--jobs", ben.jobs, "Suite n values")->delimiter(',');
  cbench->add_option("--machines", ben.machines, "Suite m values")->delimiter(',');
  cbench->add_option("--deadlines", ben.deadlines, "Suite T values")->delimiter(',');
  cbench->add_option("--alphas", ben.alphas, "Suite alpha values")->delimiter(',');
  cbench->add_option("--settings", ben.settings, "Suite settings")->delimiter(',');
  cbench->add_option("--time-limit", ben.cfg.time_limit, "Seconds per run, 0 = unlimited")
      ->capture_default_str();
  cbench->add_option("--node-limit", ben.cfg.node_limit, "Nodes per run, 0 = unlimited");
  cbench->add_option("--gap", ben.cfg.gap_target, "Relative gap target");
  cbench->add_flag("--deterministic", ben.cfg.deterministic, "Ignore the wall clock");
  cbench->add_option("--solver-command", ben.solver_command, "External MILP command");
  cbench->add_option("--csv", ben.csv, "Write per-run records here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cgen->parsed()) return cmd_gen(gen);
    if (csolve->parsed()) return cmd_solve(sol);
    if (cexport->parsed()) {
      if (exp_horizon >= 0) exp.horizon = exp_horizon;
      return cmd_export(exp);
    }
    if (ccheck->parsed()) {
      if (chk_horizon >= 0) chk.horizon = chk_horizon;
      if (chk.schedule.empty() == chk.solution.empty())
        throw std::invalid_argument("pass exactly one of --schedule / --solution");
      if (!chk.solution.empty() && chk.formulation.empty())
        throw std::invalid_argument("--solution needs --formulation");
      return cmd_check(chk);
    }
    if (cbench->parsed()) return cmd_bench(ben);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
