#pragma once

#include <cstdint>

#include "segeuler/rational.hpp"

namespace segeuler {

/// Deterministic generator of Gaussian rationals a/b + i c/d with
/// a in [-1000, 1000], c in [1, 1000] and b, d in [1, 100], so every sample
/// lies in the open upper half-plane. Driven by splitmix64, hence identical
/// across platforms for a given seed.
class UpperHalfPlaneSampler {
 public:
  explicit UpperHalfPlaneSampler(std::uint64_t seed) : state_(seed) {}
  GaussRat next();
  std::uint64_t next_word();

 private:
  std::uint64_t state_;
};

}  // namespace segeuler
