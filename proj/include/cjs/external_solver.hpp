#pragma once

// Bridge to an external MILP solver working on exported LP files.
//
// The bridge writes the model to a temporary .lp file and runs
//
//   <command> <path-to-lp-file>
//
// through the shell.  The command must print a solution to stdout, one
// variable per line:
//
//   <variable-name> <value>
//
// Blank lines and lines starting with '#' are ignored.  A line whose first
// token is "infeasible" declares the model proven infeasible.  Variables
// missing from the output default to 0.  Near-integer values on binary
// variables are snapped before checking.
//
// The returned result is conservative: a reported solution is re-checked
// against every model row and the reconstructed schedule is validated
// against the instance before the status Feasible is granted.  A nonzero
// exit status or unparseable output yields Unknown, never a wrong claim.

#include <string>

#include "cjs/formulations.hpp"
#include "cjs/instance.hpp"
#include "cjs/linear_model.hpp"
#include "cjs/solver.hpp"

namespace cjs {

// Parse solver output into an assignment over the model's variables.
// Returns true on success; sets *infeasible if the output declares the
// model infeasible.  On malformed input fills *error and returns false.
bool parse_solver_output(const LinearModel& model, const std::string& text,
                         VarAssignment* out, bool* infeasible,
                         std::string* error);

// Run `command <lp>` and interpret the output as described above.
SolveResult solve_external(const Instance& inst, const LinearModel& model,
                           const std::string& command);

}  // namespace cjs
