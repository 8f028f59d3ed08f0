#include "cjs/generator.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cjs/rng.hpp"

namespace cjs {

const std::vector<int> kGridJobs = {16, 24, 32};
const std::vector<int> kGridMachines = {2, 4, 6};
const std::vector<int64_t> kGridT = {10, 20, 40, 80};
const std::vector<int> kGridAlpha = {1, 2, 4, 8};
const std::vector<int> kGridSettings = {1, 2, 3};

namespace {

// Stream labels folded into derived seeds; part of the format contract.
constexpr uint64_t kValueStream = 1;
constexpr uint64_t kConflictStream = 2;

void processing_range(int setting, int64_t T, int64_t& lo, int64_t& hi) {
  switch (setting) {
    case 1: lo = (T + 3) / 4; hi = T / 2; break;
    case 2: lo = 1; hi = T / 2; break;
    case 3: lo = 1; hi = std::max<int64_t>(1, T / 8); break;
    default: throw std::invalid_argument("generator: setting must be 1, 2 or 3");
  }
  lo = std::max<int64_t>(1, lo);
  hi = std::max(lo, hi);
}

}  // namespace

std::string instance_name(const GenParams& params) {
  std::ostringstream out;
  out << "n" << params.n << "_m" << params.m << "_T" << params.T << "_a" << params.alpha
      << "_s" << params.setting;
  return out.str();
}

Instance generate_instance(const GenParams& params) {
  if (params.n < 1 || params.m < 1 || params.T < 1 || params.alpha < 0)
    throw std::invalid_argument("generator: need n >= 1, m >= 1, T >= 1, alpha >= 0");
  int64_t lo, hi;
  processing_range(params.setting, params.T, lo, hi);

  Instance inst;
  inst.n_jobs = params.n;
  inst.n_machines = params.m;
  inst.T = params.T;

  // Values are drawn p, then w, then r, from a stream that excludes alpha:
  // cells differing only in alpha share job data and differ in edges alone.
  SplitMix64 values(derive_seed(params.seed, kValueStream, params.n, params.m,
                                static_cast<uint64_t>(params.T), params.setting));
  inst.p.reserve(params.n);
  for (int i = 0; i < params.n; ++i) inst.p.push_back(values.range(lo, hi));
  inst.w.reserve(params.n);
  for (int i = 0; i < params.n; ++i) inst.w.push_back(values.range(1, 5));
  inst.r.reserve(params.n);
  for (int i = 0; i < params.n; ++i) inst.r.push_back(values.range(1, 5));

  // The pair sequence is keyed on (seed, n) only: every alpha takes a prefix
  // of the same shuffled sequence, so smaller-alpha edge sets nest inside
  // larger ones.
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(params.n) * (params.n - 1) / 2);
  for (int i = 0; i < params.n; ++i)
    for (int j = i + 1; j < params.n; ++j) pairs.emplace_back(i, j);
  SplitMix64 edges(derive_seed(params.seed, kConflictStream, params.n));
  edges.shuffle(pairs);

  size_t want = static_cast<size_t>(params.alpha) * static_cast<size_t>(params.n);
  bool capped = want > pairs.size();
  size_t take = capped ? pairs.size() : want;
  inst.conflicts.assign(pairs.begin(), pairs.begin() + take);
  std::sort(inst.conflicts.begin(), inst.conflicts.end());

  InstanceMeta meta;
  meta.seed = params.seed;
  meta.alpha = params.alpha;
  meta.setting = params.setting;
  meta.capped = capped;
  inst.meta = meta;
  inst.check();
  return inst;
}

std::vector<NamedInstance> generate_suite(const SuiteSpec& spec) {
  std::ostringstream bad;
  auto check_dim = [&bad](const auto& requested, const auto& grid, const char* dim) {
    for (const auto& v : requested)
      if (std::find(grid.begin(), grid.end(), v) == grid.end())
        bad << " " << dim << "=" << v;
  };
  check_dim(spec.jobs, kGridJobs, "n");
  check_dim(spec.machines, kGridMachines, "m");
  check_dim(spec.capacities, kGridT, "T");
  check_dim(spec.alphas, kGridAlpha, "alpha");
  check_dim(spec.settings, kGridSettings, "setting");
  if (!bad.str().empty())
    throw std::invalid_argument("generate_suite: values outside the grid:" + bad.str());

  std::vector<NamedInstance> out;
  for (int n : spec.jobs)
    for (int m : spec.machines)
      for (int64_t T : spec.capacities)
        for (int alpha : spec.alphas)
          for (int setting : spec.settings) {
            GenParams params{n, m, T, alpha, setting, spec.master_seed};
            out.push_back({instance_name(params), generate_instance(params)});
          }
  return out;
}

}  // namespace cjs
