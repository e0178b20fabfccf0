#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "segeuler/rational.hpp"

namespace segeuler {

/// Dense univariate polynomial over Q; coeffs()[k] is the coefficient of x^k.
///
/// The representation is canonical: the highest stored coefficient is nonzero,
/// and the zero polynomial is the empty sequence. Equality is therefore plain
/// coefficient-wise comparison.
class UniPoly {
 public:
  /// Degree reported for the zero polynomial; below every real degree.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, int power);
  /// The polynomial x.
  static UniPoly identity();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero for k outside [0, degree].
  Rat coeff(int k) const;
  /// Leading coefficient. Throws UndefinedInputError on the zero polynomial.
  const Rat& leading() const;

  Rat evaluate(const Rat& x) const;
  GaussRat evaluate(const GaussRat& z) const;
  int sign_at(const Rat& x) const { return sgn(evaluate(x)); }
  /// Sign as x -> +inf / -inf (0 for the zero polynomial).
  int sign_at_pos_inf() const;
  int sign_at_neg_inf() const;

  UniPoly derivative() const;
  /// Divides by the leading coefficient. Zero stays zero.
  UniPoly monic() const;
  /// Positive rational multiple with coprime integer coefficients.
  UniPoly integer_primitive() const;
  /// f(x + c).
  UniPoly shift(const Rat& c) const;
  /// f(lambda * x).
  UniPoly scale_argument(const Rat& lambda) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const Rat& factor);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rat& c) { return a *= c; }
  friend UniPoly operator*(const Rat& c, UniPoly a) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  /// Comma-separated coefficients, constant term first ("13,10,1", "1/2,0,3").
  /// The zero polynomial serializes as "0".
  std::string to_string() const;
  static UniPoly parse(std::string_view text);

  /// Human-readable form in the given variable, e.g. "t^2 + 10*t + 13".
  std::string pretty(std::string_view var = "x") const;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

UniPoly scale(const UniPoly& f, const Rat& factor);
UniPoly pow(const UniPoly& f, int exponent);

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division over Q. Throws UndefinedInputError when divisor is zero.
DivMod divmod(const UniPoly& dividend, const UniPoly& divisor);

/// Exact quotient; throws UndefinedInputError if the division leaves a remainder.
UniPoly exact_divide(const UniPoly& dividend, const UniPoly& divisor);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b);

/// Monic gcd via the subresultant pseudo-remainder sequence on integer
/// primitive parts. gcd(f, 0) = monic(f); gcd(0, 0) throws UndefinedInputError.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// f / gcd(f, f'), made monic. Throws UndefinedInputError on zero.
UniPoly squarefree_part(const UniPoly& f);

/// Squarefree factorization (Yun): returns monic a_1, a_2, ... with
/// f = lc(f) * prod a_k^k, the a_k pairwise coprime and squarefree.
/// Entry k-1 holds a_k (possibly the constant 1).
std::vector<UniPoly> squarefree_decomposition(const UniPoly& f);

}  // namespace segeuler
