#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cjs/instance.hpp"

namespace cjs {

struct Assignment {
  int machine = 0;
  int64_t start = 0;
};

// Jobs run in half-open intervals [start, start + p): a job may begin
// exactly when another ends, on the same machine or across a conflict edge.
struct Schedule {
  std::vector<std::optional<Assignment>> assignment;  // one slot per job
  std::vector<int> rejected;                          // MaxSum only

  int64_t completion(const Instance& inst, int job) const {
    return assignment[job]->start + inst.p[job];
  }
};

enum class Violation {
  Malformed,            // bad indices, negative start, unassigned/unrejected job
  DuplicateAssignment,  // job both assigned and rejected
  MachineOverlap,
  ConflictOverlap,
  Deadline,
};

const char* violation_name(Violation v);

struct ValidationReport {
  struct Entry {
    Violation kind;
    std::string detail;
  };
  std::vector<Entry> entries;

  bool feasible() const { return entries.empty(); }
  std::string to_string() const;
};

class InfeasibleScheduleError : public std::runtime_error {
 public:
  InfeasibleScheduleError(std::string what, ValidationReport report)
      : std::runtime_error(std::move(what)), report(std::move(report)) {}
  ValidationReport report;
};

// Checks a schedule against `inst` under `obj`: structural sanity, machine
// exclusivity, conflict exclusivity (half-open intervals), the deadline for
// MaxSum, and completeness (MinSum/MinMax assign every job; MaxSum partitions
// jobs into assigned and rejected).
ValidationReport validate_schedule(const Instance& inst, const Schedule& sched, Objective obj);

// Objective value of a feasible schedule: MaxSum = sum of r over assigned,
// MinSum = sum of w * (start + p), MinMax = max completion. Throws
// InfeasibleScheduleError (carrying the report) if validation fails.
int64_t evaluate(const Instance& inst, const Schedule& sched, Objective obj);

// Admissible makespan lower bound: max of ceil(total_p / machines), the
// longest job, and the best total processing time over a greedily grown
// conflict clique (mutually conflicting jobs can never run concurrently).
int64_t minmax_lower_bound(const Instance& inst);

}  // namespace cjs
