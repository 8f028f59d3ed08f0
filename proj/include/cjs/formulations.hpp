#pragma once

#include <cstdint>
#include <optional>

#include "cjs/instance.hpp"
#include "cjs/linear_model.hpp"
#include "cjs/schedule.hpp"

namespace cjs {

// Builds one of nine models: three formulations crossed with three
// objectives.
//
//   F1 (position-indexed): x_i_m_k picks the k-th position on machine m,
//      z_m_k tracks the completion of that position, one ordering binary
//      per conflict edge. K = floor(horizon / min p).
//   F2 (pairwise-ordering): x_i_m assigns machines, y_i_j orders every
//      ordered job pair (the unreferenced diagonal y_i_i is kept so the
//      variable count matches the stated |J|^2 + |M||J| + |J| exactly).
//   F3 (time-indexed): x_i_m_t occupies 1-based unit slots, zz_i accepts a
//      job. Slot t covers [t-1, t), so a job starting at s fills slots
//      s+1 .. s+p and the model's s-variable equals s + 1.
//
// The horizon is T for MaxSum and sum(p) otherwise; `horizon_override`
// replaces it (used by binary-search probes, where the deadline row of F1
// and the slot range of F3 enforce the probed makespan). The big constant
// is B = horizon + sum of p over jobs that have at least one conflict.
// MinSum objectives are sum w_i * s_i, a constant sum w_i * p_i below the
// canonical weighted completion; LinearModel::objective_shift accounts for
// it (and for F3's one-slot offset).
LinearModel build_model(const Instance& inst, Formulation formulation, Objective objective,
                        std::optional<int64_t> horizon_override = std::nullopt);

// Maps a feasible schedule onto a complete variable assignment that
// satisfies every row of `model`. Rejected MaxSum jobs keep all assignment
// variables at zero; their virtual start variables are placed after the
// horizon (serialized, for jobs with conflicts) or at zero/horizon where
// nothing constrains the order. Throws InfeasibleScheduleError if the
// schedule fails validation, std::invalid_argument if the schedule cannot
// be expressed (completion past the model horizon, or a rejected job too
// long for the big-B envelope).
VarAssignment embed_schedule(const LinearModel& model, const Instance& inst,
                             const Schedule& sched);

// Reads a schedule back from an integral assignment. For F3 the per-slot
// machine choices may migrate; occupied intervals are recolored greedily
// (they form an interval graph, so machines suffice for any assignment
// that satisfies the capacity rows). The result is not validated here.
Schedule reconstruct_schedule(const LinearModel& model, const Instance& inst,
                              const VarAssignment& assignment);

}  // namespace cjs
