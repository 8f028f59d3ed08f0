#pragma once

// Shared helpers for the test binaries: a seeded sampler of small instances
// (sized for the brute-force reference) and a few schedule builders.

#include <cstdlib>
#include <fstream>
#include <string>

#include "cjs/instance.hpp"
#include "cjs/rng.hpp"
#include "cjs/schedule.hpp"

namespace cjs::testutil {

struct SampleLimits {
  int max_n = 6;
  int max_m = 3;
  int64_t max_T = 12;
  bool allow_empty = false;
};

// Small random instance. Conflict density cycles through none / complete /
// random so the extremes are always exercised. Processing times stay within
// [1, T] so MaxSum instances keep schedulable jobs without forcing all of
// them to fit.
inline Instance sample_instance(SplitMix64& rng, const SampleLimits& lim = {}) {
  Instance inst;
  int lo_n = lim.allow_empty ? 0 : 1;
  inst.n_jobs = lo_n + static_cast<int>(rng.bounded(lim.max_n - lo_n + 1));
  inst.n_machines = 1 + static_cast<int>(rng.bounded(lim.max_m));
  inst.T = 1 + static_cast<int64_t>(rng.bounded(static_cast<uint64_t>(lim.max_T)));
  for (int j = 0; j < inst.n_jobs; ++j) {
    inst.p.push_back(1 + static_cast<int64_t>(rng.bounded(static_cast<uint64_t>(*inst.T))));
    inst.w.push_back(1 + static_cast<int64_t>(rng.bounded(9)));
    inst.r.push_back(1 + static_cast<int64_t>(rng.bounded(9)));
  }
  uint64_t mode = rng.bounded(4);  // 0: no conflicts, 1: complete, else random
  for (int a = 0; a < inst.n_jobs; ++a)
    for (int b = a + 1; b < inst.n_jobs; ++b) {
      bool edge = mode == 1 || (mode >= 2 && rng.bounded(2) == 0);
      if (edge) inst.conflicts.emplace_back(a, b);
    }
  inst.check();
  return inst;
}

// Absolute path of a helper script shipped in tools/. Tests receive the
// directory through the CJS_TOOLS_DIR environment variable set by ctest.
inline std::string tools_path(const std::string& file) {
  const char* dir = std::getenv("CJS_TOOLS_DIR");
  return (dir ? std::string(dir) : std::string("../tools")) + "/" + file;
}

inline void write_text(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  f << content;
}

}  // namespace cjs::testutil
