#pragma once

#include <cstdint>
#include <vector>

namespace tabdx {

// Deterministic, platform-independent generator (xoshiro256** seeded via
// splitmix64). The standard <random> distributions are not bit-stable across
// implementations, so sampling helpers are hand-rolled here; every seeded
// artifact in the project (models, synthetic tables, splits) depends on this
// being reproducible everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  // Independent stream for task `stream` of a run seeded with `seed`.
  // Used for per-tree, per-row, per-repeat generators so that parallel and
  // serial execution produce identical results.
  static Rng derive(uint64_t seed, uint64_t stream);

  uint64_t next_u64();

  // Uniform on [0, 1).
  double next_double();

  // Uniform integer on [0, n), unbiased. n must be >= 1.
  uint64_t next_below(uint64_t n);

  // Standard normal via Box-Muller (no cached spare, fully deterministic).
  double next_gaussian();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t state_[4];
};

}  // namespace tabdx
