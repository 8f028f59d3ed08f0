#pragma once

#include <cstdint>
#include <vector>

namespace cjs {

// Deterministic 64-bit generator (splitmix64). The exact update and the
// helpers below are part of the file-format contract: suites regenerate
// byte-identically from a seed, in any port that follows docs/FORMATS.md.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw from {0, ..., n-1} by rejection on the top partial range.
  uint64_t bounded(uint64_t n) {
    for (;;) {
      uint64_t x = next();
      uint64_t r = x % n;
      if (x - r <= UINT64_MAX - (n - 1)) return r;
    }
  }

  // Draw from the inclusive range [lo, hi].
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(bounded(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Fisher-Yates: for i = len-1 down to 1, swap a[i] with a[bounded(i+1)].
  template <typename T>
  void shuffle(std::vector<T>& a) {
    for (size_t i = a.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(bounded(i));
      std::swap(a[i - 1], a[j]);
    }
  }

 private:
  uint64_t state_;
};

// splitmix64 finalizer without the counter increment; used to fold stream
// labels and grid coordinates into per-stream seeds.
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Left fold: acc = mix64(acc ^ part). Distinct leading parts give
// independent streams from one master seed.
template <typename... Parts>
uint64_t derive_seed(uint64_t seed, Parts... parts) {
  uint64_t acc = seed;
  ((acc = mix64(acc ^ static_cast<uint64_t>(parts))), ...);
  return acc;
}

}  // namespace cjs
