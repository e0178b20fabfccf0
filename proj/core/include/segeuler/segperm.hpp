#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace segeuler {

/// Largest n accepted by the enumerators (bars fit in a 32-bit slot mask).
inline constexpr int kMaxEnumerationN = 16;

/// A permutation of [n], stored one byte per entry.
class Permutation {
 public:
  /// Validates that entries is a bijection on [n]; throws RangeError otherwise.
  explicit Permutation(std::span<const int> entries);
  static Permutation identity(int n);

  int size() const { return n_; }
  /// 1-based access: at(1) is the first entry.
  int at(int position) const { return entries_[static_cast<std::size_t>(position - 1)]; }
  std::vector<int> entries() const;

  /// Mask of slots i (bit i-1) with entry i > entry i+1.
  std::uint32_t descent_slots() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Permutation() = default;
  friend class PermutationStream;

  std::array<std::uint8_t, kMaxEnumerationN> entries_{};
  std::uint8_t n_ = 0;
};

/// Statistic sets of a segmented permutation, as bitmasks over values
/// (bit v-1 set when value v belongs to the set).
struct StatSets {
  std::uint32_t dt = 0;   ///< descent tops, slot unbarred
  std::uint32_t at = 0;   ///< ascent tops, slot unbarred
  std::uint32_t dts = 0;  ///< descent tops, slot barred
  std::uint32_t ats = 0;  ///< ascent tops, slot barred

  static std::vector<int> values(std::uint32_t mask);
  friend bool operator==(const StatSets&, const StatSets&) = default;
};

/// A permutation with bars in some of its n-1 slots. Slot i sits between
/// positions i and i+1 and is stored as bit i-1 of bars().
class SegmentedPermutation {
 public:
  /// Throws RangeError if a bar lies outside the slots 1..n-1.
  SegmentedPermutation(Permutation perm, std::uint32_t bars);
  /// From a list of slot indices (duplicates are rejected).
  static SegmentedPermutation with_bars(Permutation perm, std::span<const int> slots);

  /// Parses bar notation: "2|516|34"; comma-separated entries ("2|5,1,6|3,4")
  /// are accepted always and required when n >= 10.
  static SegmentedPermutation parse(std::string_view text);

  const Permutation& perm() const { return perm_; }
  int size() const { return perm_.size(); }
  std::uint32_t bars() const { return bars_; }
  bool barred(int slot) const { return (bars_ >> (slot - 1)) & 1U; }

  /// Bar notation; commas between entries when n >= 10.
  std::string to_string() const;

  friend bool operator==(const SegmentedPermutation&, const SegmentedPermutation&) = default;

 private:
  Permutation perm_;
  std::uint32_t bars_;
};

/// Number of unbarred descents.
int des(const SegmentedPermutation& sigma);
/// Number of bars.
int seg(const SegmentedPermutation& sigma);
StatSets stat_sets(const SegmentedPermutation& sigma);

/// Lexicographic stream of permutations of [n] whose first entries equal a
/// fixed prefix. With an empty prefix this is all of S_n.
class PermutationStream {
 public:
  explicit PermutationStream(int n, std::vector<int> prefix = {});

  std::optional<Permutation> next();
  int size() const { return n_; }

 private:
  int n_;
  std::size_t prefix_length_;
  Permutation current_;
  bool started_ = false;
  bool done_ = false;
};

/// Stream over segmented permutations, ordered lexicographically by
/// (permutation, bars read as an integer).
class SegmentedStream {
 public:
  explicit SegmentedStream(int n, std::vector<int> prefix = {});

  std::optional<SegmentedPermutation> next();
  /// Descent mask of the permutation underlying the last value returned.
  std::uint32_t current_descent_slots() const { return descent_slots_; }

 private:
  PermutationStream perms_;
  std::optional<Permutation> perm_;
  std::uint32_t descent_slots_ = 0;
  std::uint32_t bar_limit_;
  std::uint32_t next_bars_ = 0;
};

/// Throws RangeError unless 1 <= n <= kMaxEnumerationN.
void check_enumeration_n(int n);

PermutationStream enumerate_permutations(int n);
SegmentedStream enumerate_segmented(int n);

/// All prefixes of the given length in lexicographic order; concatenating the
/// streams for these prefixes reproduces the full stream exactly.
std::vector<std::vector<int>> partition_prefixes(int n, int prefix_length);
std::vector<PermutationStream> partition_permutations(int n, int prefix_length);
std::vector<SegmentedStream> partition_segmented(int n, int prefix_length);

}  // namespace segeuler
