#include "segeuler/eulerbase.hpp"

#include <string>

#include "segeuler/errors.hpp"

namespace segeuler {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw RangeError(std::string(what) + ": n must be >= 1, got " + std::to_string(n));
}

}  // namespace

Int binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Int factorial(int n) {
  if (n < 0) throw RangeError("factorial of a negative number");
  Int out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

std::vector<Int> eulerian_row(int n) {
  require_positive(n, "eulerian_row");
  std::vector<Int> row{1};
  for (int m = 2; m <= n; ++m) {
    std::vector<Int> next(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      Int value = 0;
      if (k < m - 1) value += (k + 1) * row[static_cast<std::size_t>(k)];
      if (k >= 1) value += (m - k) * row[static_cast<std::size_t>(k - 1)];
      next[static_cast<std::size_t>(k)] = value;
    }
    row = std::move(next);
  }
  return row;
}

Int eulerian_number(int n, int k) {
  require_positive(n, "eulerian_number");
  if (k < 0 || k > n - 1) return 0;
  return eulerian_row(n)[static_cast<std::size_t>(k)];
}

UniPoly eulerian_poly(int n) {
  const auto row = eulerian_row(n);
  return UniPoly(std::vector<Rat>(row.begin(), row.end()));
}

Int stirling2(int n, int k) {
  if (n < 0 || k < 0) throw RangeError("stirling2 arguments must be nonnegative");
  if (k > n) return 0;
  // S(m, j) = j S(m-1, j) + S(m-1, j-1), rolling over m.
  std::vector<Int> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j)
      row[static_cast<std::size_t>(j)] = j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

UniPoly ordered_bell_poly(int n) {
  require_positive(n, "ordered_bell_poly");
  std::vector<Rat> coeffs;
  for (int r = 0; r <= n - 1; ++r) coeffs.emplace_back(factorial(r + 1) * stirling2(n, r + 1));
  return UniPoly(std::move(coeffs));
}

BiPoly closed_alpha(int n) {
  const auto row = eulerian_row(n);
  const std::vector<Rat> coeffs(row.begin(), row.end());
  return binomial_expand_sum(coeffs);
}

UniPoly closed_P(int n) { return closed_alpha(n).specialize(BiVar::kQ, 1); }

Int k_convolution(int n, int i, int j) {
  require_positive(n, "k_convolution");
  if (i < 0 || j < 0) return 0;
  const auto row = eulerian_row(n);
  Int sum = 0;
  for (int k = 0; k <= n - 1; ++k)
    sum += binomial(k, i) * binomial(n - 1 - k, i + j - k) * row[static_cast<std::size_t>(k)];
  return sum;
}

int gf_min_cutoff(int n, int m) { return 4 * (n + m) + 8; }

namespace {

Rat gf_term(int n, int m, int k) {
  Int power;
  mpz_pow_ui(power.get_mpz_t(), Int(k).get_mpz_t(), static_cast<unsigned long>(n));
  Int two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(k + 1));
  return make_rat(binomial(k - 1, m) * power, two_pow);
}

}  // namespace

GfBracket gf_partial_sum(int n, int m, int cutoff) {
  require_positive(n, "gf_partial_sum");
  if (m < 0) throw RangeError("gf_partial_sum: m must be >= 0");
  if (cutoff < gf_min_cutoff(n, m))
    throw UsageError("gf_partial_sum: cutoff " + std::to_string(cutoff) + " below the validity threshold " +
                     std::to_string(gf_min_cutoff(n, m)));
  Rat partial = 0;
  for (int k = m + 1; k <= cutoff; ++k) partial += gf_term(n, m, k);
  return {partial, 4 * gf_term(n, m, cutoff + 1), cutoff};
}

Rat gf_target(int n, int m) {
  require_positive(n, "gf_target");
  if (m < 0) throw RangeError("gf_target: m must be >= 0");
  const UniPoly p = closed_P(n);
  Rat sum = 0;
  for (int a = 0; a <= std::min(m, p.degree()); ++a) sum += p.coeff(a) * binomial(m - a + n, n);
  return sum;
}

}  // namespace segeuler
