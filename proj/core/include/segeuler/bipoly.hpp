#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "segeuler/rational.hpp"
#include "segeuler/unipoly.hpp"

namespace segeuler {

/// The two variables of a BiPoly: t (first exponent) and q (second exponent).
enum class BiVar { kT, kQ };

/// Sparse bivariate polynomial sum c_ij t^i q^j over Q. No zero coefficient is
/// ever stored, so the empty map is the zero polynomial.
class BiPoly {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Rat>;

  BiPoly() = default;

  static BiPoly constant(const Rat& c);
  static BiPoly monomial(const Rat& c, int t_power, int q_power);
  /// Embeds f as a polynomial in the chosen variable.
  static BiPoly from_uni(const UniPoly& f, BiVar var);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Rat coeff(int i, int j) const;
  void add_term(int i, int j, const Rat& c);

  int degree_in(BiVar var) const;
  int total_degree() const;

  /// Substitutes value for var, returning a polynomial in the other variable.
  UniPoly specialize(BiVar var, const Rat& value) const;
  /// Coefficient polynomials f_0, f_1, ... of F = sum_j f_j * var^j, each a
  /// polynomial in the other variable; trailing zero slices are trimmed.
  std::vector<UniPoly> slices(BiVar var) const;

  GaussRat evaluate(const GaussRat& t, const GaussRat& q) const;
  /// Sum of all coefficients.
  Rat coefficient_sum() const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator*=(const Rat& factor);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator*(BiPoly a, const Rat& c) { return a *= c; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

  /// e.g. "t^2 + 6*t*q + 4*t + 6*q^2 + 6*q + 1" in graded-descending order.
  std::string to_string() const;

 private:
  Terms terms_;
};

BiPoly scale(const BiPoly& f, const Rat& factor);

/// Returns sum_{k=0}^{n-1} coeffs[k] * (t+q)^k * (1+q)^(n-1-k) with
/// n = coeffs.size(). Empty input gives zero.
BiPoly binomial_expand_sum(std::span<const Rat> coeffs);

}  // namespace segeuler
