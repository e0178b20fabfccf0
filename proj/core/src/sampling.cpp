#include "segeuler/sampling.hpp"

namespace segeuler {

std::uint64_t UpperHalfPlaneSampler::next_word() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

GaussRat UpperHalfPlaneSampler::next() {
  const auto pick = [this](long lo, long hi) {
    return lo + static_cast<long>(next_word() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const long a = pick(-1000, 1000);
  const long b = pick(1, 100);
  const long c = pick(1, 1000);
  const long d = pick(1, 100);
  return {make_rat(a, b), make_rat(c, d)};
}

}  // namespace segeuler
