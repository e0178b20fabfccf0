#include "segeuler/genmultivar.hpp"

#include <atomic>
#include <bit>
#include <thread>

#include "segeuler/errors.hpp"
#include "segeuler/reduced_poly.hpp"

namespace segeuler {

namespace {

void check_limit(int n, int limit, const char* what) {
  if (n < 1) throw RangeError(std::string(what) + ": n must be >= 1");
  if (n > limit)
    throw ResourceError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the limit " +
                        std::to_string(limit));
}

}  // namespace

Monomial descent_monomial(const Permutation& pi) {
  Monomial m = 0;
  for (int i = 1; i < pi.size(); ++i) {
    const int left = pi.at(i);
    const int right = pi.at(i + 1);
    m |= left > right ? bit_of(x_(left)) : bit_of(y_(right));
  }
  return m;
}

Monomial segmented_monomial(const SegmentedPermutation& sigma) {
  const Permutation& p = sigma.perm();
  Monomial m = 0;
  for (int i = 1; i < p.size(); ++i) {
    const int left = p.at(i);
    const int right = p.at(i + 1);
    const bool bar = sigma.barred(i);
    if (left > right)
      m |= bit_of(bar ? z_(left) : x_(left));
    else
      m |= bit_of(bar ? w_(right) : y_(right));
  }
  return m;
}

MultiAffinePoly build_A(int n) {
  check_limit(n, kBuildALimit, "build_A");
  MultiAffinePoly out(n);
  auto stream = enumerate_permutations(n);
  while (auto pi = stream.next()) out.add_term(descent_monomial(*pi), 1);
  return out;
}

MultiAffinePoly build_alpha_direct(int n) {
  check_limit(n, kBuildAlphaLimit, "build_alpha_direct");
  MultiAffinePoly out(n);
  auto stream = enumerate_segmented(n);
  while (auto sigma = stream.next()) out.add_term(segmented_monomial(*sigma), 1);
  return out;
}

std::vector<SegmentOperator> default_operator_order(int n) {
  std::vector<SegmentOperator> order;
  for (int j = 2; j <= n; ++j) {
    order.push_back({SegmentOperator::Kind::kDescentToSegment, j});
    order.push_back({SegmentOperator::Kind::kAscentToSegment, j});
  }
  return order;
}

MultiAffinePoly apply_segment_operators(const MultiAffinePoly& a, int n) {
  const auto order = default_operator_order(n);
  return apply_segment_operators(a, n, order);
}

MultiAffinePoly apply_segment_operators(const MultiAffinePoly& a, int n,
                                        std::span<const SegmentOperator> order) {
  if (n < 1 || n > a.ambient())
    throw RangeError("apply_segment_operators: n = " + std::to_string(n) + " incompatible with ambient bound " +
                     std::to_string(a.ambient()));
  Monomial forbidden = 0;
  for (int j = 2; j <= n; ++j) forbidden |= bit_of(z_(j)) | bit_of(w_(j));
  for (const auto& [m, c] : a.terms()) {
    if (m & forbidden)
      throw DomainError(DomainCode::kNotMultiaffine,
                        "input already carries " + monomial_to_string(m & forbidden));
  }
  MultiAffinePoly out = a;
  for (const SegmentOperator& op : order) {
    if (op.kind == SegmentOperator::Kind::kDescentToSegment)
      out = apply_raising_operator(out, x_(op.position), z_(op.position));
    else
      out = apply_raising_operator(out, y_(op.position), w_(op.position));
  }
  return out;
}

BbTestResult bb_test_polynomial(int n, int j, Alphabet alphabet) {
  check_limit(n, kBbTestLimit, "bb_test_polynomial");
  if (j < 1 || j > n) throw RangeError("bb_test_polynomial: j outside [1, n]");
  const VarId from = alphabet == Alphabet::kX ? x_(j) : y_(j);
  const VarId to = alphabet == Alphabet::kX ? z_(j) : w_(j);

  SparsePoly product = SparsePoly::constant(1);
  SparsePoly closed = SparsePoly::constant(1);
  for (int i = 1; i <= n; ++i) {
    for (VarId v : {x_(i), y_(i), z_(i), w_(i)}) {
      const SparsePoly factor = SparsePoly::linear({v, hat(v)});
      product = product * factor;
      closed = closed * (v == from ? SparsePoly::linear({v, hat(v), to}) : factor);
    }
  }
  SparsePoly computed = product + SparsePoly::linear({to}) * partial_derivative(product, from);
  const bool matches = computed == closed;
  return {std::move(computed), std::move(closed), matches};
}

BiPoly specialize_alpha(const MultiAffinePoly& alpha, int n) {
  if (alpha.ambient() != n) throw DimensionError("specialize_alpha: ambient bound differs from n");
  ReducedPoly r = diagonalize(alpha, VarClass::kX, "t");
  r = specialize(r, VarClass::kY, Rat(1));
  r = diagonalize(r, VarClass::kZ, "q");
  r = diagonalize(r, VarClass::kW, "q");
  return to_bipoly(r, "t", "q");
}

DesSegCounts::DesSegCounts(int n) : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

std::uint64_t DesSegCounts::total() const {
  std::uint64_t sum = 0;
  for (auto c : cells_) sum += c;
  return sum;
}

DesSegCounts& DesSegCounts::operator+=(const DesSegCounts& other) {
  if (other.n_ != n_) throw DimensionError("merging count matrices of different n");
  for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] += other.cells_[k];
  return *this;
}

BiPoly DesSegCounts::to_bipoly() const {
  BiPoly out;
  for (int d = 0; d < n_; ++d)
    for (int s = 0; s < n_; ++s) {
      const std::uint64_t c = at(d, s);
      if (c) out.add_term(d, s, Rat(Int(std::to_string(c), 10)));
    }
  return out;
}

DesSegCounts streaming_counts(int n, const StreamingOptions& options) {
  if (options.limit > kStreamingHardLimit)
    throw RangeError("streaming limit above the hard limit " + std::to_string(kStreamingHardLimit));
  check_limit(n, options.limit, "streaming_alpha");
  if (options.threads < 1) throw RangeError("streaming_alpha: threads must be >= 1");

  const int prefix_length = n >= 3 ? 2 : n - 1;
  auto partitions = partition_segmented(n, prefix_length);
  std::vector<DesSegCounts> partials(partitions.size(), DesSegCounts(n));
  std::atomic<std::size_t> next_task{0};

  auto worker = [&] {
    for (std::size_t task = next_task++; task < partitions.size(); task = next_task++) {
      SegmentedStream& stream = partitions[task];
      DesSegCounts& acc = partials[task];
      while (auto sigma = stream.next()) {
        const std::uint32_t bars = sigma->bars();
        acc.add(std::popcount(stream.current_descent_slots() & ~bars), std::popcount(bars));
      }
    }
  };

  const auto workers = static_cast<std::size_t>(options.threads) < partitions.size()
                           ? static_cast<std::size_t>(options.threads)
                           : partitions.size();
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t k = 0; k < workers; ++k) pool.emplace_back(worker);
  }

  DesSegCounts total(n);
  for (const auto& part : partials) total += part;
  return total;
}

BiPoly streaming_alpha(int n, const StreamingOptions& options) { return streaming_counts(n, options).to_bipoly(); }

ProbeReport probe_stability(const MultiAffinePoly& f, std::size_t samples, std::uint64_t seed) {
  const HornerEvaluator eval(f);
  UpperHalfPlaneSampler sampler(seed);
  ProbeReport report;
  std::array<GaussRat, 64> values{};
  for (std::size_t s = 0; s < samples; ++s) {
    for (int bit = 0; bit < 64; ++bit)
      if (eval.support() >> bit & 1) values[static_cast<std::size_t>(bit)] = sampler.next();
    ++report.samples;
    if (eval(values).is_zero()) {
      report.zero_found = true;
      for (int bit = 0; bit < 64; ++bit)
        if (eval.support() >> bit & 1)
          report.witness.emplace_back(to_string(var_of_bit(bit)), values[static_cast<std::size_t>(bit)]);
      break;
    }
  }
  return report;
}

namespace {

// F(t, q) == 0 tested over Gaussian integers after clearing all denominators.
bool bipoly_vanishes(const BiPoly& f, const GaussRat& t, const GaussRat& q) {
  Int common = 1;
  for (const Rat* r : {&t.re, &t.im, &q.re, &q.im})
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), r->get_den_mpz_t());
  Int coeff_den = 1;
  for (const auto& [e, c] : f.terms()) mpz_lcm(coeff_den.get_mpz_t(), coeff_den.get_mpz_t(), c.get_den_mpz_t());
  const GaussInt ts{t.re.get_num() * (common / t.re.get_den()), t.im.get_num() * (common / t.im.get_den())};
  const GaussInt qs{q.re.get_num() * (common / q.re.get_den()), q.im.get_num() * (common / q.im.get_den())};
  const int dt = std::max(0, f.degree_in(BiVar::kT));
  const int dq = std::max(0, f.degree_in(BiVar::kQ));
  const int dtot = std::max(0, f.total_degree());
  std::vector<GaussInt> tp{{1, 0}};
  std::vector<GaussInt> qp{{1, 0}};
  std::vector<Int> lp{1};
  for (int k = 1; k <= dt; ++k) tp.push_back(tp.back() * ts);
  for (int k = 1; k <= dq; ++k) qp.push_back(qp.back() * qs);
  for (int k = 1; k <= dtot; ++k) lp.push_back(lp.back() * common);
  GaussInt sum;
  for (const auto& [e, c] : f.terms()) {
    const Int scaled = c.get_num() * (coeff_den / c.get_den()) * lp[static_cast<std::size_t>(dtot - e.first - e.second)];
    const GaussInt m = tp[static_cast<std::size_t>(e.first)] * qp[static_cast<std::size_t>(e.second)];
    sum = sum + GaussInt{m.re * scaled, m.im * scaled};
  }
  return sum.is_zero();
}

}  // namespace

ProbeReport probe_stability(const BiPoly& f, std::size_t samples, std::uint64_t seed) {
  UpperHalfPlaneSampler sampler(seed);
  ProbeReport report;
  for (std::size_t s = 0; s < samples; ++s) {
    const GaussRat t = sampler.next();
    const GaussRat q = sampler.next();
    ++report.samples;
    if (bipoly_vanishes(f, t, q)) {
      report.zero_found = true;
      report.witness = {{"t", t}, {"q", q}};
      break;
    }
  }
  return report;
}

}  // namespace segeuler
