// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. `--extended` adds the n = 9, 10 enumeration comparison.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "segeuler/eulerbase.hpp"
#include "segeuler/genmultivar.hpp"
#include "segeuler/rootcert.hpp"
#include "segeuler/segperm.hpp"
#include "segeuler/verify.hpp"

using namespace segeuler;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 = no wall-clock bound
  std::function<Outcome()> run;
};

std::string failure_text(const VerificationReport& r) {
  const CellResult* bad = r.first_failure();
  return bad == nullptr ? std::string() : to_json(*bad).dump();
}

Outcome from_report(const VerificationReport& r) {
  if (r.all_passed()) return {true, std::to_string(r.cells.size()) + " cells"};
  return {false, failure_text(r)};
}

Outcome bar_notation_example() {
  SegmentedPermutation sigma = SegmentedPermutation::parse("2|516|34");
  std::vector<int> entries{2, 5, 1, 6, 3, 4};
  Permutation pi(entries);
  const Monomial w_seg = monomial_of({w_(5), x_(5), y_(6), z_(6), y_(4)});
  const Monomial w_plain = monomial_of({y_(5), x_(5), y_(6), x_(6), y_(4)});
  std::ostringstream d;
  d << "des=" << des(sigma) << " seg=" << seg(sigma) << " w'=" << monomial_to_string(segmented_monomial(sigma))
    << " w=" << monomial_to_string(descent_monomial(pi));
  bool ok = des(sigma) == 1 && seg(sigma) == 2 && segmented_monomial(sigma) == w_seg &&
            descent_monomial(pi) == w_plain;
  return {ok, d.str()};
}

Outcome closed_vs_enumeration(int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    BiPoly closed = closed_alpha(n);
    BiPoly counted = streaming_alpha(n, {1, kStreamingDefaultLimit});
    if (closed != counted) return {false, "n=" + std::to_string(n) + " closed " + closed.to_string() + " counted " +
                                              counted.to_string()};
  }
  return {true, "n=1.." + std::to_string(n_max) + " single-thread"};
}

Outcome closed_P_and_sums() {
  for (int n = 1; n <= 20; ++n) {
    BiPoly alpha = closed_alpha(n);
    if (closed_P(n) != alpha.specialize(BiVar::kQ, 1)) return {false, "P_" + std::to_string(n) + " != alpha(t,1)"};
    Int expected = oracle::factorial(n) * (Int(1) << (n - 1));
    if (alpha.coefficient_sum() != Rat(expected) || closed_P(n).evaluate(Rat(1)) != Rat(expected)) {
      return {false, "coefficient sum at n=" + std::to_string(n)};
    }
  }
  return {true, "n=1..20"};
}

Outcome specializations() {
  VerificationReport r = check_specializations(20);
  if (!r.all_passed()) return {false, failure_text(r)};
  // ordered Bell coefficients against set-partition counts
  for (int n = 1; n <= 8; ++n) {
    UniPoly bell = closed_alpha(n).specialize(BiVar::kT, 0);
    for (int r2 = 0; r2 < n; ++r2) {
      Int expected = oracle::factorial(r2 + 1) * oracle::stirling2(n, r2 + 1);
      if (bell.coeff(r2) != Rat(expected)) return {false, "ordered Bell mismatch n=" + std::to_string(n)};
    }
    std::vector<oracle::Int> eul = oracle::eulerian_row(n);
    UniPoly at_q0 = closed_alpha(n).specialize(BiVar::kQ, 0);
    for (int k = 0; k < n; ++k) {
      if (at_q0.coeff(k) != Rat(eul[static_cast<std::size_t>(k)])) return {false, "Eulerian mismatch"};
    }
  }
  return {true, "n=1..20"};
}

Outcome gf_remark() {
  VerificationReport r = check_gf_remark(4, 3, 15);
  if (!r.all_passed()) return {false, failure_text(r)};
  const Rat eps = make_rat(1, Int("1000000000000000"));
  for (int n = 1; n <= 4; ++n) {
    std::vector<Rat> p = closed_P(n).coeffs();
    std::vector<Rat> series = oracle::divide_by_one_minus_t_power(p, n + 1, 3);
    for (int m = 0; m <= 3; ++m) {
      const Rat& target = series[static_cast<std::size_t>(m)];
      int cutoff = gf_min_cutoff(n, m);
      GfBracket b = gf_partial_sum(n, m, cutoff);
      while (b.tail_bound >= eps) b = gf_partial_sum(n, m, cutoff *= 2);
      if (target < b.partial || target > b.partial + b.tail_bound) {
        return {false, "n=" + std::to_string(n) + " m=" + std::to_string(m) + " outside bracket"};
      }
    }
  }
  return {true, "n<=4, m<=3, tail<1e-15"};
}

Outcome probes() {
  VerificationReport r = check_stability_probes({5, 5, 10, 10000}, {1, kDefaultSeed, nullptr, false});
  if (r.all_passed()) return {true, std::to_string(r.cells.size()) + " cells x 10000 points, no zero"};
  return {false, "zero found: " + failure_text(r)};
}

Outcome oracle_suites() {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> deg(1, 8);
  std::uniform_int_distribution<int> small(0, 4);
  int counted = 0;
  int isolated = 0;
  int interlaced = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int d = deg(rng);
    std::vector<Rat> roots = oracle::distinct_rationals(rng, d);
    UniPoly f = UniPoly(oracle::poly_from_roots(roots)) * Rat(small(rng) + 1);
    UniPoly with_pair = f * UniPoly{small(rng) + 1, 0, 1};
    if (count_real_roots(f) == d && count_real_roots(with_pair) == d) ++counted;

    std::vector<IsolatingInterval> ivs = isolate_roots(f);
    bool ok = ivs.size() == roots.size();
    for (std::size_t k = 0; ok && k < ivs.size(); ++k) {
      ok = ivs[k].lo <= roots[k] && roots[k] <= ivs[k].hi && (k + 1 == ivs.size() || ivs[k].hi < ivs[k + 1].lo);
    }
    if (ok) ++isolated;

    const int e = std::max(d, 2);
    std::vector<Rat> a = oracle::distinct_rationals(rng, e);
    std::vector<Rat> b;
    for (int k = 0; k + 1 < e; ++k) {
      const Rat& lo = a[static_cast<std::size_t>(k)];
      const Rat& hi = a[static_cast<std::size_t>(k) + 1];
      b.push_back(lo + (hi - lo) * make_rat(small(rng), 4));
    }
    UniPoly fa(oracle::poly_from_roots(a));
    bool woven = interlaces(UniPoly(oracle::poly_from_roots(b)), fa).verdict;
    std::vector<Rat> moved = b;
    moved[static_cast<std::size_t>(trial) % moved.size()] = a.back() + 1;
    bool broken = interlaces(UniPoly(oracle::poly_from_roots(moved)), fa).verdict;
    if (woven && !broken) ++interlaced;
  }
  std::ostringstream d;
  d << "count " << counted << "/200, isolate " << isolated << "/200, interlace " << interlaced << "/200";
  return {counted == 200 && isolated == 200 && interlaced == 200, d.str()};
}

Outcome parallel_determinism() {
  DesSegCounts one = streaming_counts(8, {1});
  DesSegCounts two = streaming_counts(8, {2});
  DesSegCounts four = streaming_counts(8, {4});
  bool ok = one == two && one == four;
  return {ok, "total " + std::to_string(one.total()) + (ok ? ", matrices identical" : ", matrices differ")};
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  for (int i = 1; i < argc; ++i) extended = extended || std::strcmp(argv[i], "--extended") == 0;

  std::vector<Criterion> criteria{
      {1, "example statistics and monomials of 2|516|34", 0, bar_notation_example},
      {2, "operator product on A_n equals alpha_n, n <= 6", 10, [] { return from_report(check_operator_identity(6)); }},
      {3, "closed alpha_n equals enumeration, n <= 8", 30, [] { return closed_vs_enumeration(8); }},
      {4, "P_n = alpha_n(t,1) and coefficient sum n! 2^(n-1), n <= 20", 1, closed_P_and_sums},
      {5, "convolution formula equals enumerated K(n,i,j), n <= 8", 0,
       [] { return from_report(check_convolution(8)); }},
      {6, "alpha_n(t,0) = A_n(t) and alpha_n(0,q) = ordered Bell, n <= 20", 0, specializations},
      {7, "P_n real-rooted n <= 20; K and L slices Sturm sequences n <= 12", 60,
       [] { return from_report(check_real_rootedness(20, 12)); }},
      {8, "unimodal and log-concave T and K rows and columns, n <= 12", 0,
       [] { return from_report(check_conjecture(12)); }},
      {9, "generating-function coefficients in certified bracket", 5, gf_remark},
      {10, "stability probes find no zero", 0, probes},
      {11, "constructed-root oracles for count, isolate, interlace", 0, oracle_suites},
      {12, "streaming alpha_8 identical for 1, 2, 4 workers", 0, parallel_determinism},
  };
  if (extended) {
    criteria.push_back({3, "closed alpha_n equals enumeration, n = 9, 10 (extended)", 0,
                        [] { return closed_vs_enumeration(10); }});
  }

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget)";
    }
    failures += !o.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " -- " << o.detail << " (" << secs
         << " s)";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
