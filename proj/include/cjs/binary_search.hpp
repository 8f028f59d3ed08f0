#pragma once

// MinMax makespan by binary search on the horizon.
//
// The optimum lies in [ceil(sum p / m), sum p].  Each step probes the
// midpoint T_mid with a feasibility question: is there a schedule whose
// completions all fit in [0, T_mid]?  A feasible probe yields a witness
// whose makespan becomes the new incumbent and pulls the upper end down to
// makespan - 1; a proven-infeasible probe pushes the lower end to
// T_mid + 1.  The loop therefore finishes in at most
// ceil(log2(T_ub - T_lb + 1)) + 1 probes and, when every probe reaches a
// proof, returns the exact optimum.
//
// Probes can run on the native solver in decision mode or on the
// position-indexed / time-indexed deadline models through the external
// bridge.  If a probe ends Unknown (limits hit, bridge failure), the search
// stops and degrades: the best witness so far stays the incumbent and the
// dual bound is the smallest horizon not yet proven impossible.

#include <optional>
#include <string>

#include "cjs/instance.hpp"
#include "cjs/solver.hpp"

namespace cjs {

enum class ProbeBackend { Native, F1, F3 };

const char* probe_backend_name(ProbeBackend b);
std::optional<ProbeBackend> probe_backend_from_name(const std::string& name);

struct BinarySearchConfig {
  ProbeBackend backend = ProbeBackend::Native;
  // Limits applied to every native probe.  The native decision probe proves
  // or disproves feasibility outright, so gap_target plays no role there;
  // external probes stop per the external command's own rules.
  SolveConfig probe;
  std::string solver_command;  // required for the F1 / F3 backends
};

// Result fields: incumbent and schedule are the best witness makespan,
// bound the proven lower end, stats.iterations the number of probes.
SolveResult binary_search_minmax(const Instance& inst,
                                 const BinarySearchConfig& cfg = {});

// Worst-case probe count for the initial interval; the search never exceeds
// it and tests pin that.
int64_t binary_search_max_iterations(const Instance& inst);

}  // namespace cjs
