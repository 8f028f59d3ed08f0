#include "cjs/external_solver.hpp"

#include <sys/wait.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "cjs/schedule.hpp"

namespace cjs {
namespace {

constexpr double kSnapTol = 1e-6;

// Admissible bound that needs no solver: completions are at least p_j for
// MinSum, the load/length/clique bound for MinMax, the full profit for
// MaxSum.  With it a checked external solution reports an honest gap even
// though the bridge carries no dual information.
double trivial_bound(const Instance& inst, Objective obj) {
  switch (obj) {
    case Objective::MaxSum: {
      int64_t total = 0;
      for (int j = 0; j < inst.n_jobs; ++j) total += inst.r[j];
      return static_cast<double>(total);
    }
    case Objective::MinSum: {
      int64_t total = 0;
      for (int j = 0; j < inst.n_jobs; ++j) total += inst.w[j] * inst.p[j];
      return static_cast<double>(total);
    }
    case Objective::MinMax:
      return static_cast<double>(minmax_lower_bound(inst));
  }
  return 0;
}

std::string run_command(const std::string& cmd, int* exit_status, std::string* error) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *error = "failed to launch: " + cmd;
    *exit_status = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int rc = pclose(pipe);
  *exit_status = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
  return out;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

bool parse_solver_output(const LinearModel& model, const std::string& text,
                         VarAssignment* out, bool* infeasible, std::string* error) {
  out->clear();
  out->reserve(model.vars.size());
  for (const ModelVar& v : model.vars) (*out)[v.name] = 0.0;
  *infeasible = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name) || name[0] == '#') continue;
    if (lower(name) == "infeasible") {
      *infeasible = true;
      return true;
    }
    auto it = out->find(name);
    if (it == out->end()) {
      *error = "line " + std::to_string(lineno) + ": unknown variable '" + name + "'";
      return false;
    }
    double value;
    if (!(ls >> value)) {
      *error = "line " + std::to_string(lineno) + ": missing value for '" + name + "'";
      return false;
    }
    it->second = value;
  }
  // Snap near-integers on binaries so a solver's 0.9999999 passes the exact
  // {0,1} domain check.
  for (const ModelVar& v : model.vars) {
    if (v.kind != VarKind::Binary) continue;
    double& x = (*out)[v.name];
    double r = std::round(x);
    if (std::fabs(x - r) <= kSnapTol) x = r;
  }
  return true;
}

SolveResult solve_external(const Instance& inst, const LinearModel& model,
                           const std::string& command) {
  SolveResult res;
  res.stats.nodes = 0;
  if (command.empty()) throw std::invalid_argument("external solver command is empty");

  namespace fs = std::filesystem;
  char tmpl[] = "/tmp/cjs.XXXXXX";
  char* dir = mkdtemp(tmpl);
  if (!dir) {
    res.note = "could not create temporary directory";
    return res;
  }
  fs::path lp_path = fs::path(dir) / "model.lp";
  {
    std::ofstream f(lp_path);
    f << export_lp(model);
  }

  int exit_status = 0;
  std::string error;
  std::string output = run_command(command + " " + lp_path.string(), &exit_status, &error);
  std::error_code ec;
  fs::remove_all(dir, ec);

  if (!error.empty()) {
    res.note = error;
    return res;
  }
  if (exit_status != 0) {
    res.note = "solver exited with status " + std::to_string(exit_status);
    return res;
  }

  VarAssignment asg;
  bool infeasible = false;
  if (!parse_solver_output(model, output, &asg, &infeasible, &error)) {
    res.note = "unparseable solver output: " + error;
    return res;
  }
  if (infeasible) {
    res.status = SolveStatus::Infeasible;
    res.gap = 0;
    res.bound = model.sense == Sense::Minimize
                    ? std::numeric_limits<double>::infinity()
                    : -std::numeric_limits<double>::infinity();
    return res;
  }

  ModelCheck check = check_assignment(model, asg);
  if (!check.feasible) {
    std::string head;
    for (size_t i = 0; i < check.violations.size() && i < 3; ++i) {
      if (i) head += ", ";
      head += check.violations[i];
    }
    res.note = "solution violates " + std::to_string(check.violations.size()) +
               " row(s): " + head;
    return res;
  }

  Schedule sched = reconstruct_schedule(model, inst, asg);
  ValidationReport report = validate_schedule(inst, sched, model.objective);
  if (!report.feasible()) {
    res.note = "reconstructed schedule invalid: " + report.to_string();
    return res;
  }

  res.status = SolveStatus::Feasible;
  res.incumbent = evaluate(inst, sched, model.objective);
  res.schedule = std::move(sched);
  res.bound = trivial_bound(inst, model.objective);
  res.gap = relative_gap(res.incumbent, res.bound);
  return res;
}

}  // namespace cjs
