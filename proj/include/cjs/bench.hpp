#pragma once

// Benchmark harness: run a set of methods over a set of instances, collect
// one record per (instance, method), emit a CSV and grouped text summaries.
//
// Methods:
//   native               branch-and-bound on the chosen objective
//   bs-native            binary-search makespan with native probes (MinMax)
//   bs-f1 / bs-f3        binary-search with external model probes (MinMax)
//   f1 / f2 / f3         one-shot external solve of the chosen model
//   oracle               exhaustive reference; errors past its size guard
//
// A method that does not apply (wrong objective, or no external command
// configured) produces a Skipped record rather than an error, so a suite
// can always run end to end.  Summaries report mean wall time, mean gap,
// and the share of runs proven Optimal, grouped by each instance dimension
// (n, m, T, alpha, setting) plus a Total row.

#include <string>
#include <vector>

#include "cjs/instance.hpp"
#include "cjs/solver.hpp"

namespace cjs {

struct BenchConfig {
  std::vector<std::string> methods = {"native"};
  Objective objective = Objective::MinMax;
  SolveConfig solve;            // limits for native runs and native probes
  std::string solver_command;   // external methods; empty => skipped
};

struct BenchRecord {
  std::string instance;
  int n = 0;
  int m = 0;
  int64_t T = -1;     // -1 when the instance has no deadline
  int alpha = -1;     // -1 when the instance carries no generator meta
  int setting = -1;
  std::string method;
  std::string objective;
  std::string status;  // Optimal, Feasible, Infeasible, Unknown, Skipped, Error
  std::optional<int64_t> incumbent;
  double bound = 0;
  double gap = 1.0;
  double time_s = 0;
  int64_t nodes = 0;
  int64_t iterations = 0;
  std::string note;
};

struct BenchRun {
  std::string name;
  Instance inst;
};

std::vector<BenchRecord> run_bench(const std::vector<BenchRun>& runs,
                                   const BenchConfig& cfg);

// One row per record; commas in notes are replaced so the file stays flat.
std::string bench_csv(const std::vector<BenchRecord>& records);

// Text tables: per grouping dimension and per method, mean time over
// completed runs, mean gap, share proven Optimal, and skip counts.
std::string bench_summary(const std::vector<BenchRecord>& records);

}  // namespace cjs
