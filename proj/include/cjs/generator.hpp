#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cjs/instance.hpp"

namespace cjs {

// One cell of the benchmark grid. Free-form values are allowed here;
// generate_suite additionally restricts every dimension to the grid below.
struct GenParams {
  int n = 0;        // jobs
  int m = 0;        // machines
  int64_t T = 0;    // deadline / generation scale
  int alpha = 0;    // requested conflicts = alpha * n, capped at n*(n-1)/2
  int setting = 1;  // processing-time range, see docs/FORMATS.md
  uint64_t seed = 0;
};

// Supported grid for full suites: 3 * 3 * 4 * 4 * 3 = 432 instances.
extern const std::vector<int> kGridJobs;        // 16, 24, 32
extern const std::vector<int> kGridMachines;    // 2, 4, 6
extern const std::vector<int64_t> kGridT;       // 10, 20, 40, 80
extern const std::vector<int> kGridAlpha;       // 1, 2, 4, 8
extern const std::vector<int> kGridSettings;    // 1, 2, 3

struct SuiteSpec {
  uint64_t master_seed = 1;
  std::vector<int> jobs = kGridJobs;
  std::vector<int> machines = kGridMachines;
  std::vector<int64_t> capacities = kGridT;
  std::vector<int> alphas = kGridAlpha;
  std::vector<int> settings = kGridSettings;
};

struct NamedInstance {
  std::string name;
  Instance instance;
};

// Canonical file stem, e.g. "n16_m2_T10_a1_s1".
std::string instance_name(const GenParams& params);

// Deterministic construction from (seed, grid coordinates) alone; see
// docs/FORMATS.md for the exact draw order. The conflict pair sequence
// depends only on (seed, n), so the edge set for a smaller alpha is always
// a subset of the edge set for a larger alpha.
Instance generate_instance(const GenParams& params);

// All grid cells of `spec` in loop order n, m, T, alpha, setting. Throws
// std::invalid_argument listing any requested value outside the grid.
std::vector<NamedInstance> generate_suite(const SuiteSpec& spec);

}  // namespace cjs
