#include "cjs/binary_search.hpp"

#include <cmath>
#include <stdexcept>

#include "cjs/external_solver.hpp"
#include "cjs/formulations.hpp"
#include "cjs/schedule.hpp"

namespace cjs {

const char* probe_backend_name(ProbeBackend b) {
  switch (b) {
    case ProbeBackend::Native: return "native";
    case ProbeBackend::F1: return "f1";
    case ProbeBackend::F3: return "f3";
  }
  return "?";
}

std::optional<ProbeBackend> probe_backend_from_name(const std::string& name) {
  if (name == "native") return ProbeBackend::Native;
  if (name == "f1") return ProbeBackend::F1;
  if (name == "f3") return ProbeBackend::F3;
  return std::nullopt;
}

namespace {

int64_t initial_lower(const Instance& inst) {
  int64_t total = inst.total_p();
  return (total + inst.n_machines - 1) / inst.n_machines;
}

SolveResult run_probe(const Instance& inst, int64_t horizon,
                      const BinarySearchConfig& cfg) {
  if (cfg.backend == ProbeBackend::Native)
    return solve_decision_minmax(inst, horizon, cfg.probe);
  if (cfg.solver_command.empty())
    throw std::invalid_argument(std::string(probe_backend_name(cfg.backend)) +
                                " probes need an external solver command");
  Formulation f = cfg.backend == ProbeBackend::F1 ? Formulation::F1 : Formulation::F3;
  LinearModel model = build_model(inst, f, Objective::MinMax, horizon);
  return solve_external(inst, model, cfg.solver_command);
}

}  // namespace

int64_t binary_search_max_iterations(const Instance& inst) {
  int64_t width = inst.total_p() - initial_lower(inst) + 1;
  if (width < 1) width = 1;
  int64_t iters = 1;
  for (int64_t span = 1; span < width; span *= 2) ++iters;
  return iters;
}

SolveResult binary_search_minmax(const Instance& inst, const BinarySearchConfig& cfg) {
  inst.check_for(Objective::MinMax);

  SolveResult res;
  if (inst.n_jobs == 0) {
    res.status = SolveStatus::Optimal;
    res.incumbent = 0;
    res.bound = 0;
    res.gap = 0;
    res.schedule = Schedule{};
    res.stats.iterations = 0;
    return res;
  }

  int64_t lo = initial_lower(inst);  // proven: no horizon below lo works
  int64_t hi = inst.total_p();       // list scheduling on one machine fits here

  std::optional<Schedule> best;
  int64_t best_makespan = 0;
  bool degraded = false;
  int64_t iterations = 0;
  int64_t nodes = 0;

  while (lo <= hi) {
    int64_t mid = lo + (hi - lo) / 2;
    ++iterations;
    SolveResult probe = run_probe(inst, mid, cfg);
    nodes += probe.stats.nodes;
    if (probe.status == SolveStatus::Feasible || probe.status == SolveStatus::Optimal) {
      int64_t makespan = evaluate(inst, *probe.schedule, Objective::MinMax);
      best = std::move(probe.schedule);
      best_makespan = makespan;
      hi = makespan - 1;
    } else if (probe.status == SolveStatus::Infeasible) {
      lo = mid + 1;
    } else {
      degraded = true;
      res.note = "probe at horizon " + std::to_string(mid) + " ended unknown" +
                 (probe.note.empty() ? "" : ": " + probe.note);
      break;
    }
  }

  res.stats.iterations = iterations;
  res.stats.nodes = nodes;
  res.bound = static_cast<double>(lo);
  if (best) {
    res.incumbent = best_makespan;
    res.schedule = std::move(best);
    if (degraded) {
      res.status = SolveStatus::Feasible;
      res.gap = relative_gap(best_makespan, res.bound);
    } else {
      // lo > hi = best_makespan - 1, so every smaller horizon is impossible.
      res.status = SolveStatus::Optimal;
      res.bound = static_cast<double>(best_makespan);
      res.gap = 0;
    }
  } else {
    res.status = SolveStatus::Unknown;
    res.gap = 1.0;
  }
  return res;
}

}  // namespace cjs
