#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "segeuler/rational.hpp"

namespace segeuler {

/// Variable alphabets. The hatted classes only occur in stability-preserver
/// test polynomials.
enum class VarClass : std::uint8_t { kX, kY, kZ, kW, kXHat, kYHat, kZHat, kWHat };

inline constexpr int kVarClassCount = 8;
/// Largest position representable in a monomial key.
inline constexpr int kMaxPositions = 8;

const char* class_name(VarClass cls) noexcept;

struct VarId {
  VarClass cls;
  int position;

  friend bool operator==(const VarId&, const VarId&) = default;
};

VarId x_(int position);
VarId y_(int position);
VarId z_(int position);
VarId w_(int position);
/// The hatted partner of an unhatted variable.
VarId hat(VarId v);

/// "x_5", "zh_2", ...
std::string to_string(VarId v);

/// A multiaffine monomial is a set of variables, stored as a 64-bit mask with
/// bit (class * kMaxPositions + position - 1) per variable.
using Monomial = std::uint64_t;

Monomial bit_of(VarId v);
VarId var_of_bit(int bit);
Monomial monomial_of(std::initializer_list<VarId> vars);
int monomial_degree(Monomial m);
std::string monomial_to_string(Monomial m);

/// Sparse multiaffine polynomial with integer coefficients over variables whose
/// positions lie in [1, n]. Each variable appears at most once per monomial by
/// construction, and no zero coefficient is stored.
class MultiAffinePoly {
 public:
  using Terms = std::unordered_map<Monomial, Int>;

  explicit MultiAffinePoly(int n);

  static MultiAffinePoly constant(int n, const Int& c);
  static MultiAffinePoly variable(int n, VarId v);

  int ambient() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Int coeff(Monomial m) const;

  /// Adds c to the coefficient of m (erasing it if it cancels).
  void add_term(Monomial m, const Int& c);

  /// Terms sorted by monomial key, the canonical serialization order.
  std::vector<std::pair<Monomial, Int>> sorted_terms() const;

  MultiAffinePoly& operator+=(const MultiAffinePoly& other);
  MultiAffinePoly& operator*=(const Int& factor);
  friend MultiAffinePoly operator+(MultiAffinePoly a, const MultiAffinePoly& b) {
    return a += b;
  }
  /// Product; throws DomainError(kNotMultiaffine) if two monomials share a
  /// variable, and DimensionError on mismatched ambient bounds.
  friend MultiAffinePoly operator*(const MultiAffinePoly& a, const MultiAffinePoly& b);

  /// Structural equality. Throws DimensionError on mismatched ambient bounds.
  friend bool operator==(const MultiAffinePoly& a, const MultiAffinePoly& b);

  /// Exact evaluation; values[bit] gives the value of the variable with that bit.
  GaussRat evaluate(const std::array<GaussRat, 64>& values) const;

  /// Canonical text form, terms in ascending key order.
  std::string to_string() const;

 private:
  void check_position(VarId v) const;
  friend MultiAffinePoly partial_derivative(const MultiAffinePoly&, VarId);
  friend MultiAffinePoly apply_raising_operator(const MultiAffinePoly&, VarId, VarId);

  int n_;
  Terms terms_;
};

/// Precomputed exact evaluator for repeated evaluation of one polynomial.
///
/// Coordinates are brought to a common denominator L so that the sum runs
/// over Gaussian integers with a multivariate Horner scheme; the result is
/// divided by L^D at the end (D = maximal monomial degree).
class HornerEvaluator {
 public:
  explicit HornerEvaluator(const MultiAffinePoly& f);

  /// Mask of all variables occurring in the polynomial.
  Monomial support() const { return support_; }
  GaussRat operator()(const std::array<GaussRat, 64>& values) const;

 private:
  std::vector<Monomial> keys_;
  std::vector<Int> coeffs_;
  std::vector<int> degrees_;
  Monomial support_ = 0;
  int max_degree_ = 0;
};

/// Sparse polynomial with integer coefficients and arbitrary exponents over
/// the same variables as MultiAffinePoly. Holds results of operators that
/// leave the multiaffine world, such as z_j * (z_j + zh_j).
class SparsePoly {
 public:
  using Exponents = std::array<std::uint8_t, 64>;
  using Terms = std::map<Exponents, Int>;

  SparsePoly() = default;
  explicit SparsePoly(const MultiAffinePoly& f);
  static SparsePoly constant(const Int& c);
  /// Sum of the given variables (each with coefficient 1).
  static SparsePoly linear(std::initializer_list<VarId> vars);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_multiaffine() const;
  void add_term(const Exponents& e, const Int& c);

  SparsePoly& operator+=(const SparsePoly& other);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

SparsePoly partial_derivative(const SparsePoly& f, VarId v);

MultiAffinePoly scale(const MultiAffinePoly& f, const Int& factor);

/// d f / d v. Monomials without v vanish; v is dropped from the others.
MultiAffinePoly partial_derivative(const MultiAffinePoly& f, VarId v);

/// (1 + to * d/d from) f. Throws DomainError(kNotMultiaffine) if the result
/// would contain `to` squared.
MultiAffinePoly apply_raising_operator(const MultiAffinePoly& f, VarId from, VarId to);

}  // namespace segeuler
