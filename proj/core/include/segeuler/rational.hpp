#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace segeuler {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (gmpxx canonicalizes after every arithmetic operation).
using Rat = mpq_class;

/// Builds num/den in canonical form. Throws UndefinedInputError when den == 0.
Rat make_rat(const Int& num, const Int& den);

/// "num" for integers, "num/den" otherwise.
std::string to_string(const Rat& value);
std::string to_string(const Int& value);

/// Parses "num" or "num/den" (optional sign, decimal digits). Throws ParseError.
Rat parse_rat(std::string_view text);

inline int sign(const Rat& value) { return sgn(value); }
inline int sign(const Int& value) { return sgn(value); }

bool is_integer(const Rat& value);

/// Gaussian rational re + i*im with exact arithmetic.
struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() = default;
  GaussRat(Rat r, Rat i = 0) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// "re+im*i" using exact rational strings.
std::string to_string(const GaussRat& value);

/// Gaussian integer; the scaled form used by fast exact evaluation.
struct GaussInt {
  Int re;
  Int im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
};

}  // namespace segeuler
