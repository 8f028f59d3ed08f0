#pragma once

#include <cstdint>

#include "cjs/instance.hpp"
#include "cjs/schedule.hpp"

namespace cjs {

struct OracleLimits {
  int max_jobs = 8;  // refuse larger instances instead of truncating
};

struct OracleResult {
  int64_t optimum = 0;
  Schedule schedule;               // first witness in enumeration order
  uint64_t orientations = 0;       // acyclic orientations evaluated
};

// Exhaustive reference solver, deliberately structured unlike the
// branch-and-bound engine: it enumerates orientations (machine assignment,
// per-machine job order, a direction for every conflict edge that crosses
// machines, and for MaxSum the accepted subset), then computes earliest
// starts as longest paths over arcs u -> v of weight p_u. Cyclic
// orientations are skipped. Every feasible schedule can be left-shifted
// onto the earliest-start schedule of its induced orientation, so scanning
// all orientations finds the exact optimum.
//
// Throws std::invalid_argument when the instance exceeds limits.max_jobs.
OracleResult brute_force(const Instance& inst, Objective obj,
                         const OracleLimits& limits = {});

}  // namespace cjs
