#include "segeuler/segperm.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "segeuler/errors.hpp"

namespace segeuler {

void check_enumeration_n(int n) {
  if (n < 1 || n > kMaxEnumerationN)
    throw RangeError("n = " + std::to_string(n) + " outside [1, " + std::to_string(kMaxEnumerationN) + "]");
}

Permutation::Permutation(std::span<const int> entries) {
  const int n = static_cast<int>(entries.size());
  check_enumeration_n(n);
  std::uint32_t seen = 0;
  for (int k = 0; k < n; ++k) {
    const int v = entries[static_cast<std::size_t>(k)];
    if (v < 1 || v > n || (seen >> (v - 1) & 1U))
      throw RangeError("not a permutation of [" + std::to_string(n) + "]");
    seen |= 1U << (v - 1);
    entries_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(v);
  }
  n_ = static_cast<std::uint8_t>(n);
}

Permutation Permutation::identity(int n) {
  check_enumeration_n(n);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int k = 0; k < n; ++k) p.entries_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(k + 1);
  return p;
}

std::vector<int> Permutation::entries() const {
  return {entries_.begin(), entries_.begin() + n_};
}

std::uint32_t Permutation::descent_slots() const {
  std::uint32_t mask = 0;
  for (int i = 0; i + 1 < n_; ++i)
    if (entries_[static_cast<std::size_t>(i)] > entries_[static_cast<std::size_t>(i + 1)]) mask |= 1U << i;
  return mask;
}

std::vector<int> StatSets::values(std::uint32_t mask) {
  std::vector<int> out;
  for (int v = 1; mask; ++v, mask >>= 1)
    if (mask & 1U) out.push_back(v);
  return out;
}

SegmentedPermutation::SegmentedPermutation(Permutation perm, std::uint32_t bars)
    : perm_(perm), bars_(bars) {
  const int slots = perm_.size() - 1;
  if (slots < 32 && (bars >> slots) != 0) throw RangeError("bar outside slots 1..n-1");
}

SegmentedPermutation SegmentedPermutation::with_bars(Permutation perm, std::span<const int> slots) {
  std::uint32_t bars = 0;
  for (int s : slots) {
    if (s < 1 || s > perm.size() - 1) throw RangeError("bar slot " + std::to_string(s) + " outside 1..n-1");
    if (bars >> (s - 1) & 1U) throw RangeError("duplicate bar slot " + std::to_string(s));
    bars |= 1U << (s - 1);
  }
  return {perm, bars};
}

SegmentedPermutation SegmentedPermutation::parse(std::string_view text) {
  std::vector<int> entries;
  std::vector<int> slots;
  const bool comma_form = text.find(',') != std::string_view::npos;
  std::size_t i = 0;
  bool expect_entry = true;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '|') {
      if (entries.empty() || expect_entry) throw ParseError("misplaced bar in '" + std::string(text) + "'");
      slots.push_back(static_cast<int>(entries.size()));
      expect_entry = true;
      ++i;
    } else if (c == ',') {
      if (expect_entry) throw ParseError("misplaced comma in '" + std::string(text) + "'");
      expect_entry = true;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (comma_form) {
        if (!expect_entry) throw ParseError("missing separator in '" + std::string(text) + "'");
        int value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          value = value * 10 + (text[i++] - '0');
        entries.push_back(value);
      } else {
        entries.push_back(c - '0');
        ++i;
      }
      expect_entry = false;
    } else {
      throw ParseError("unexpected character in '" + std::string(text) + "'");
    }
  }
  if (entries.empty() || expect_entry) throw ParseError("incomplete permutation '" + std::string(text) + "'");
  if (entries.size() >= 10 && !comma_form)
    throw ParseError("n >= 10 requires comma-separated entries");
  try {
    return with_bars(Permutation(entries), slots);
  } catch (const RangeError& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

std::string SegmentedPermutation::to_string() const {
  const int n = perm_.size();
  const bool commas = n >= 10;
  std::string out;
  for (int pos = 1; pos <= n; ++pos) {
    out += std::to_string(perm_.at(pos));
    if (pos == n) break;
    if (barred(pos))
      out += '|';
    else if (commas)
      out += ',';
  }
  return out;
}

int des(const SegmentedPermutation& sigma) {
  return std::popcount(sigma.perm().descent_slots() & ~sigma.bars());
}

int seg(const SegmentedPermutation& sigma) { return std::popcount(sigma.bars()); }

StatSets stat_sets(const SegmentedPermutation& sigma) {
  StatSets s;
  const Permutation& p = sigma.perm();
  for (int i = 1; i < p.size(); ++i) {
    const int left = p.at(i);
    const int right = p.at(i + 1);
    const bool bar = sigma.barred(i);
    if (left > right)
      (bar ? s.dts : s.dt) |= 1U << (left - 1);
    else
      (bar ? s.ats : s.at) |= 1U << (right - 1);
  }
  return s;
}

PermutationStream::PermutationStream(int n, std::vector<int> prefix)
    : n_(n), prefix_length_(prefix.size()) {
  check_enumeration_n(n);
  if (prefix.size() > static_cast<std::size_t>(n)) throw RangeError("prefix longer than n");
  std::uint32_t used = 0;
  for (int v : prefix) {
    if (v < 1 || v > n || (used >> (v - 1) & 1U)) throw RangeError("invalid prefix entry");
    used |= 1U << (v - 1);
  }
  std::vector<int> entries = prefix;
  for (int v = 1; v <= n; ++v)
    if (!(used >> (v - 1) & 1U)) entries.push_back(v);
  current_ = Permutation(entries);
}

std::optional<Permutation> PermutationStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return current_;
  }
  auto first = current_.entries_.begin() + static_cast<std::ptrdiff_t>(prefix_length_);
  auto last = current_.entries_.begin() + n_;
  if (!std::next_permutation(first, last)) {
    done_ = true;
    return std::nullopt;
  }
  return current_;
}

SegmentedStream::SegmentedStream(int n, std::vector<int> prefix)
    : perms_(n, std::move(prefix)), bar_limit_(1U << (n - 1)) {
  next_bars_ = bar_limit_;
}

std::optional<SegmentedPermutation> SegmentedStream::next() {
  if (next_bars_ == bar_limit_) {
    perm_ = perms_.next();
    if (!perm_) return std::nullopt;
    descent_slots_ = perm_->descent_slots();
    next_bars_ = 0;
  }
  return SegmentedPermutation(*perm_, next_bars_++);
}

PermutationStream enumerate_permutations(int n) { return PermutationStream(n); }

SegmentedStream enumerate_segmented(int n) { return SegmentedStream(n); }

std::vector<std::vector<int>> partition_prefixes(int n, int prefix_length) {
  check_enumeration_n(n);
  if (prefix_length < 0 || prefix_length > n) throw RangeError("prefix length outside [0, n]");
  std::vector<std::vector<int>> out{{}};
  for (int depth = 0; depth < prefix_length; ++depth) {
    std::vector<std::vector<int>> grown;
    for (const auto& prefix : out) {
      for (int v = 1; v <= n; ++v) {
        if (std::find(prefix.begin(), prefix.end(), v) != prefix.end()) continue;
        auto extended = prefix;
        extended.push_back(v);
        grown.push_back(std::move(extended));
      }
    }
    out = std::move(grown);
  }
  return out;
}

std::vector<PermutationStream> partition_permutations(int n, int prefix_length) {
  std::vector<PermutationStream> out;
  for (auto& prefix : partition_prefixes(n, prefix_length)) out.emplace_back(n, std::move(prefix));
  return out;
}

std::vector<SegmentedStream> partition_segmented(int n, int prefix_length) {
  std::vector<SegmentedStream> out;
  for (auto& prefix : partition_prefixes(n, prefix_length)) out.emplace_back(n, std::move(prefix));
  return out;
}

}  // namespace segeuler
