#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "segeuler/bipoly.hpp"
#include "segeuler/multiaffine.hpp"
#include "segeuler/sampling.hpp"
#include "segeuler/segperm.hpp"

namespace segeuler {

/// Largest n for building A_n(x, y) symbolically.
inline constexpr int kBuildALimit = 8;
/// Largest n for building alpha_n(x, y, z, w) symbolically; n = 7 is allowed
/// but takes noticeably longer than n <= 6.
inline constexpr int kBuildAlphaLimit = 7;
/// Largest n for the stability-preserver test polynomial (2^(4n) terms).
inline constexpr int kBbTestLimit = 4;
/// Default and hard limits for the streaming (des, seg) count.
inline constexpr int kStreamingDefaultLimit = 10;
inline constexpr int kStreamingHardLimit = 12;

/// w(pi): x at descent tops, y at ascent tops.
Monomial descent_monomial(const Permutation& pi);
/// w'(sigma): x/y at unbarred descent/ascent tops, z/w at barred ones.
Monomial segmented_monomial(const SegmentedPermutation& sigma);

MultiAffinePoly build_A(int n);
MultiAffinePoly build_alpha_direct(int n);

/// One factor of the operator product: (1 + z_j d/dx_j) or (1 + w_j d/dy_j).
struct SegmentOperator {
  enum class Kind { kDescentToSegment, kAscentToSegment };
  Kind kind;
  int position;
};

/// Ascending j, the z-operator before the w-operator.
std::vector<SegmentOperator> default_operator_order(int n);

/// prod_{j=2}^{n} (1 + w_j d/dy_j)(1 + z_j d/dx_j) applied to A. Throws
/// DomainError(kNotMultiaffine) if A already carries z or w variables at
/// positions the operators act on.
MultiAffinePoly apply_segment_operators(const MultiAffinePoly& a, int n);
/// Same, applying the factors in an explicit order.
MultiAffinePoly apply_segment_operators(const MultiAffinePoly& a, int n,
                                        std::span<const SegmentOperator> order);

enum class Alphabet { kX, kY };

/// The operator product leaves the multiaffine world here (z_j meets the
/// factor (z_j + zh_j)), so both sides are general sparse polynomials.
struct BbTestResult {
  SparsePoly computed;     ///< T_j applied to prod over all 4n pairs (v + v_hat)
  SparsePoly closed_form;  ///< the factored form with (x_j + xh_j + z_j)
  bool matches;
};

/// Stability-preserver test polynomial for T_j = 1 + z_j d/dx_j (alphabet X)
/// or 1 + w_j d/dy_j (alphabet Y).
BbTestResult bb_test_polynomial(int n, int j, Alphabet alphabet);

/// x_i -> t, y_i -> 1, z_i -> q, w_i -> q.
BiPoly specialize_alpha(const MultiAffinePoly& alpha, int n);

/// Exact (des, seg) count matrix accumulated in 64-bit cells.
class DesSegCounts {
 public:
  explicit DesSegCounts(int n);

  int n() const { return n_; }
  void add(int des, int seg) { ++cells_[static_cast<std::size_t>(des * n_ + seg)]; }
  std::uint64_t at(int des, int seg) const { return cells_[static_cast<std::size_t>(des * n_ + seg)]; }
  std::uint64_t total() const;
  /// Entrywise sum; associative and commutative.
  DesSegCounts& operator+=(const DesSegCounts& other);
  friend bool operator==(const DesSegCounts&, const DesSegCounts&) = default;

  BiPoly to_bipoly() const;

 private:
  int n_;
  std::vector<std::uint64_t> cells_;
};

struct StreamingOptions {
  int threads = 1;
  /// Raise to kStreamingHardLimit to allow n = 11, 12 (hours of CPU).
  int limit = kStreamingDefaultLimit;
};

/// Single pass over every segmented permutation of [n], counting (des, seg).
/// Work is split by permutation prefix; partitions merge in a fixed order so
/// the result does not depend on the thread count.
DesSegCounts streaming_counts(int n, const StreamingOptions& options = {});
BiPoly streaming_alpha(int n, const StreamingOptions& options = {});

struct ProbeReport {
  std::size_t samples = 0;
  bool zero_found = false;
  /// The vanishing point when zero_found, one entry per variable.
  std::vector<std::pair<std::string, GaussRat>> witness;
};

/// Evaluates f exactly at `samples` seeded points of the open upper half-plane
/// in every variable that occurs. A zero disproves stability; no zero is
/// evidence only.
ProbeReport probe_stability(const MultiAffinePoly& f, std::size_t samples, std::uint64_t seed);
ProbeReport probe_stability(const BiPoly& f, std::size_t samples, std::uint64_t seed);

}  // namespace segeuler
