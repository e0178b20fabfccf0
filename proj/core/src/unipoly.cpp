#include "segeuler/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "segeuler/errors.hpp"

namespace segeuler {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, int power) {
  std::vector<Rat> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = c;
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::identity() { return monomial(1, 1); }

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rat UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rat& UniPoly::leading() const {
  if (coeffs_.empty()) throw UndefinedInputError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rat UniPoly::evaluate(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

GaussRat UniPoly::evaluate(const GaussRat& z) const {
  GaussRat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

int UniPoly::sign_at_pos_inf() const { return coeffs_.empty() ? 0 : sgn(coeffs_.back()); }

int UniPoly::sign_at_neg_inf() const {
  if (coeffs_.empty()) return 0;
  const int s = sgn(coeffs_.back());
  return degree() % 2 == 0 ? s : -s;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  const Rat inv = 1 / leading();
  return *this * inv;
}

UniPoly UniPoly::integer_primitive() const {
  if (is_zero()) return {};
  Int den_lcm = 1;
  for (const Rat& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Int num_gcd = 0;
  for (const Rat& c : coeffs_) {
    const Int scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  return *this * make_rat(den_lcm, num_gcd);
}

UniPoly UniPoly::shift(const Rat& c) const {
  // Horner in the polynomial ring: acc = acc * (x + c) + a_k.
  UniPoly acc;
  const UniPoly linear(std::vector<Rat>{c, 1});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * linear;
    acc += constant(*it);
  }
  return acc;
}

UniPoly UniPoly::scale_argument(const Rat& lambda) const {
  std::vector<Rat> out(coeffs_);
  Rat power = 1;
  for (Rat& c : out) {
    c *= power;
    power *= lambda;
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rat& factor) {
  if (sgn(factor) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Rat& c : coeffs_) c *= factor;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a) { return a * Rat(-1); }

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ',';
    out += segeuler::to_string(coeffs_[k]);
  }
  return out;
}

UniPoly UniPoly::parse(std::string_view text) {
  std::vector<Rat> coeffs;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    coeffs.push_back(parse_rat(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return UniPoly(std::move(coeffs));
}

std::string UniPoly::pretty(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    const Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0 || !unit) out << segeuler::to_string(mag);
    if (k > 0) {
      if (!unit) out << '*';
      out << var;
      if (k > 1) out << '^' << k;
    }
  }
  return out.str();
}

UniPoly scale(const UniPoly& f, const Rat& factor) { return f * factor; }

UniPoly pow(const UniPoly& f, int exponent) {
  UniPoly result = UniPoly::constant(1);
  for (int i = 0; i < exponent; ++i) result = result * f;
  return result;
}

DivMod divmod(const UniPoly& dividend, const UniPoly& divisor) {
  if (divisor.is_zero()) throw UndefinedInputError("polynomial division by zero");
  if (dividend.degree() < divisor.degree()) return {UniPoly{}, dividend};
  std::vector<Rat> rem = dividend.coeffs();
  const int dd = divisor.degree();
  const Rat inv_lead = 1 / divisor.leading();
  std::vector<Rat> quot(static_cast<std::size_t>(dividend.degree() - dd) + 1);
  for (int k = dividend.degree(); k >= dd; --k) {
    const Rat c = rem[static_cast<std::size_t>(k)] * inv_lead;
    quot[static_cast<std::size_t>(k - dd)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_divide(const UniPoly& dividend, const UniPoly& divisor) {
  DivMod qr = divmod(dividend, divisor);
  if (!qr.remainder.is_zero()) throw UndefinedInputError("inexact polynomial division");
  return std::move(qr.quotient);
}

namespace {

// Integer polynomials for the subresultant PRS, coefficient of x^k at [k].
using IntPoly = std::vector<Int>;

int ideg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

void itrim(IntPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

IntPoly to_int_poly(const UniPoly& f) {
  const UniPoly prim = f.integer_primitive();
  IntPoly out;
  out.reserve(prim.coeffs().size());
  for (const Rat& c : prim.coeffs()) out.push_back(c.get_num());
  return out;
}

// lc(b)^(deg a - deg b + 1) * a mod b, exactly that power even when the
// degree drops by more than one in a step.
IntPoly iprem(IntPoly a, const IntPoly& b) {
  const int db = ideg(b);
  const Int& lb = b.back();
  int remaining = ideg(a) - db + 1;
  while (!a.empty() && ideg(a) >= db) {
    const int shift = ideg(a) - db;
    const Int la = a.back();
    for (Int& c : a) c *= lb;
    --remaining;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + shift)] -= la * b[static_cast<std::size_t>(j)];
    itrim(a);
  }
  for (; remaining > 0; --remaining)
    for (Int& c : a) c *= lb;
  return a;
}

}  // namespace

UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw UndefinedInputError("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const int delta = a.degree() - b.degree();
  // Computed over Q, scaled by lc(b)^(delta+1) to match the classical definition.
  Rat factor = 1;
  for (int i = 0; i <= delta; ++i) factor *= b.leading();
  return divmod(a * factor, b).remainder;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw UndefinedInputError("gcd(0, 0) is undefined");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  IntPoly A = to_int_poly(a);
  IntPoly B = to_int_poly(b);
  if (ideg(A) < ideg(B)) std::swap(A, B);
  Int g = 1;
  Int h = 1;
  while (true) {
    const int delta = ideg(A) - ideg(B);
    IntPoly R = iprem(A, B);
    if (R.empty()) break;
    if (ideg(R) == 0) return UniPoly::constant(1);
    Int divisor = g;
    for (int i = 0; i < delta; ++i) divisor *= h;
    for (Int& c : R) c /= divisor;  // exact by the subresultant theorem
    A = std::move(B);
    B = std::move(R);
    g = A.back();
    if (delta == 0) {
      // h unchanged
    } else {
      Int num = 1;
      for (int i = 0; i < delta; ++i) num *= g;
      Int den = 1;
      for (int i = 0; i < delta - 1; ++i) den *= h;
      h = num / den;
    }
  }
  std::vector<Rat> coeffs;
  coeffs.reserve(B.size());
  for (const Int& c : B) coeffs.emplace_back(c);
  return UniPoly(std::move(coeffs)).monic();
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw UndefinedInputError("squarefree part of the zero polynomial");
  if (f.degree() == 0) return UniPoly::constant(1);
  return exact_divide(f, gcd(f, f.derivative())).monic();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw UndefinedInputError("squarefree decomposition of the zero polynomial");
  std::vector<UniPoly> factors;
  if (f.degree() == 0) return factors;
  const UniPoly df = f.derivative();
  const UniPoly a0 = gcd(f, df);
  UniPoly b = exact_divide(f, a0);
  UniPoly c = exact_divide(df, a0);
  UniPoly d = c - b.derivative();
  while (b.degree() > 0) {
    const UniPoly a = gcd(b, d);
    factors.push_back(a);
    b = exact_divide(b, a);
    c = exact_divide(d, a);
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

}  // namespace segeuler
