#pragma once

#include <cstdint>
#include <vector>

#include "gibbsfrag/rational.hpp"

namespace gibbsfrag {

// SplitMix64: seedable, splittable, and bit-stable across platforms, so a
// fixed seed reproduces every sample exactly. Categorical draws clear the
// rational denominators and sample an exact uniform integer, so no
// floating point enters any sampling path.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Independent child stream; advances this stream once.
  SplitMix64 split() { return SplitMix64(next_u64() ^ 0x3c79ac492ba7b653ULL); }

  // Unbiased uniform draw in [0, bound); bound >= 1.
  std::uint64_t next_below(std::uint64_t bound);
  Int next_int_below(const Int& bound);

  // Exact categorical draw; probs must be nonnegative with positive sum.
  int pick(const std::vector<Rat>& probs);

  // Uniform over {1/d, ..., d/d} given d drawn uniformly from [1, max_den];
  // convenience for randomized property checks.
  Rat random_probability(int max_den);

 private:
  std::uint64_t state_;
};

}  // namespace gibbsfrag
