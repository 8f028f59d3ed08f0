#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cjs {

enum class Objective { MaxSum, MinSum, MinMax };

const char* objective_name(Objective obj);
std::optional<Objective> objective_from_name(const std::string& name);

// Provenance of a generated instance; absent on ad-hoc instances.
struct InstanceMeta {
  uint64_t seed = 0;
  int alpha = 0;
  int setting = 0;
  bool capped = false;  // requested conflict count exceeded the complete graph
};

// A set of jobs on parallel identical machines. Conflicting job pairs may
// never run concurrently. Three objectives share this data:
//   MaxSum: maximize total profit r of jobs finishing by the deadline T
//           (jobs may be rejected),
//   MinSum: minimize the weighted sum of completion times (weights w),
//   MinMax: minimize the makespan.
struct Instance {
  int n_jobs = 0;
  int n_machines = 0;
  std::vector<int64_t> p;                        // processing times, >= 1
  std::vector<int64_t> w;                        // weights (MinSum); may be empty
  std::vector<int64_t> r;                        // profits (MaxSum); may be empty
  std::optional<int64_t> T;                      // deadline (MaxSum); generation scale otherwise
  std::vector<std::pair<int, int>> conflicts;    // 0-based pairs, i < j
  std::optional<InstanceMeta> meta;

  int64_t total_p() const {
    int64_t s = 0;
    for (int64_t v : p) s += v;
    return s;
  }

  // Throws std::invalid_argument on structural problems (bad sizes, p < 1,
  // out-of-range or duplicate conflict pairs, self conflicts).
  void check() const;

  // Throws std::invalid_argument if data required by `obj` is missing
  // (MaxSum: r and T; MinSum: w).
  void check_for(Objective obj) const;

  std::vector<std::vector<int>> adjacency() const;
};

}  // namespace cjs
