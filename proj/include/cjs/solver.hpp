#pragma once

#include <cstdint>
#include <optional>

#include "cjs/instance.hpp"
#include "cjs/schedule.hpp"

namespace cjs {

struct SolveConfig {
  double time_limit = 0;    // seconds; 0 = unlimited
  uint64_t node_limit = 0;  // 0 = unlimited
  double gap_target = 0;    // stop once |incumbent - bound| / max(|incumbent|, 1e-9) <= target
  bool deterministic = false;  // ignore the wall clock so reruns are bit-identical
};

enum class SolveStatus { Optimal, Feasible, Infeasible, Unknown };

const char* solve_status_name(SolveStatus s);

struct SolveStats {
  uint64_t nodes = 0;
  uint64_t propagations = 0;  // candidate placements examined
  double elapsed_s = 0;
  int iterations = 0;  // horizon probes (binary search only)
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<int64_t> incumbent;  // canonical objective value
  double bound = 0;                  // admissible dual bound
  double gap = 1.0;
  std::optional<Schedule> schedule;
  SolveStats stats;
  std::string note;  // diagnostics (external bridge failures and the like)
};

double relative_gap(std::optional<int64_t> incumbent, double bound);

// Exact depth-first branch-and-bound. Decisions are chronological: placed
// starts never decrease along a branch, and every start is 0, the moment a
// machine falls idle, or the completion time of an already-placed
// conflicting job (any optimal schedule can be left-shifted into this
// form). Within a node, candidate jobs are visited longest first (ties by
// lowest index) and candidate starts in increasing order; machines with
// equal idle-from times are interchangeable, so one representative each is
// tried. MaxSum treats every node as a candidate solution whose unplaced
// jobs are rejected. Bounds: MinMax extends the static makespan lower
// bound with committed loads, MinSum adds w * (earliest start + p) over
// unplaced jobs, MaxSum adds a fractional knapsack over the residual
// machine capacity. Never reports Optimal without proof.
SolveResult solve(const Instance& inst, Objective obj, const SolveConfig& cfg = {});

// Decision form: is there a complete schedule with makespan <= horizon?
// Returns Feasible with a witness, Infeasible after exhausting the tree,
// or Unknown when a limit fires first.
SolveResult solve_decision_minmax(const Instance& inst, int64_t horizon,
                                  const SolveConfig& cfg = {});

}  // namespace cjs
