#include "segeuler/multiaffine.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "segeuler/errors.hpp"

namespace segeuler {

const char* class_name(VarClass cls) noexcept {
  switch (cls) {
    case VarClass::kX: return "x";
    case VarClass::kY: return "y";
    case VarClass::kZ: return "z";
    case VarClass::kW: return "w";
    case VarClass::kXHat: return "xh";
    case VarClass::kYHat: return "yh";
    case VarClass::kZHat: return "zh";
    case VarClass::kWHat: return "wh";
  }
  return "?";
}

VarId x_(int position) { return {VarClass::kX, position}; }
VarId y_(int position) { return {VarClass::kY, position}; }
VarId z_(int position) { return {VarClass::kZ, position}; }
VarId w_(int position) { return {VarClass::kW, position}; }

VarId hat(VarId v) {
  const auto raw = static_cast<std::uint8_t>(v.cls);
  return {static_cast<VarClass>(raw < 4 ? raw + 4 : raw), v.position};
}

std::string to_string(VarId v) { return std::string(class_name(v.cls)) + "_" + std::to_string(v.position); }

Monomial bit_of(VarId v) {
  if (v.position < 1 || v.position > kMaxPositions)
    throw RangeError("variable position " + std::to_string(v.position) + " outside [1, 8]");
  return Monomial{1} << (static_cast<int>(v.cls) * kMaxPositions + v.position - 1);
}

VarId var_of_bit(int bit) {
  return {static_cast<VarClass>(bit / kMaxPositions), bit % kMaxPositions + 1};
}

Monomial monomial_of(std::initializer_list<VarId> vars) {
  Monomial m = 0;
  for (VarId v : vars) {
    const Monomial b = bit_of(v);
    if (m & b) throw DomainError(DomainCode::kNotMultiaffine, "repeated variable " + to_string(v));
    m |= b;
  }
  return m;
}

int monomial_degree(Monomial m) { return std::popcount(m); }

std::string monomial_to_string(Monomial m) {
  if (m == 0) return "1";
  std::string out;
  for (int bit = 0; bit < 64; ++bit) {
    if (!(m >> bit & 1)) continue;
    if (!out.empty()) out += '*';
    out += to_string(var_of_bit(bit));
  }
  return out;
}

MultiAffinePoly::MultiAffinePoly(int n) : n_(n) {
  if (n < 0 || n > kMaxPositions)
    throw RangeError("multiaffine ambient bound " + std::to_string(n) + " outside [0, 8]");
}

MultiAffinePoly MultiAffinePoly::constant(int n, const Int& c) {
  MultiAffinePoly out(n);
  out.add_term(0, c);
  return out;
}

MultiAffinePoly MultiAffinePoly::variable(int n, VarId v) {
  MultiAffinePoly out(n);
  out.check_position(v);
  out.add_term(bit_of(v), 1);
  return out;
}

void MultiAffinePoly::check_position(VarId v) const {
  if (v.position < 1 || v.position > n_)
    throw RangeError(segeuler::to_string(v) + " outside ambient bound " + std::to_string(n_));
}

Int MultiAffinePoly::coeff(Monomial m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void MultiAffinePoly::add_term(Monomial m, const Int& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::vector<std::pair<Monomial, Int>> MultiAffinePoly::sorted_terms() const {
  std::vector<std::pair<Monomial, Int>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

void require_same_ambient(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  if (a.ambient() != b.ambient())
    throw DimensionError("multiaffine polynomials over ambient bounds " + std::to_string(a.ambient()) +
                         " and " + std::to_string(b.ambient()));
}

}  // namespace

MultiAffinePoly& MultiAffinePoly::operator+=(const MultiAffinePoly& other) {
  require_same_ambient(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiAffinePoly& MultiAffinePoly::operator*=(const Int& factor) {
  if (sgn(factor) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= factor;
  return *this;
}

MultiAffinePoly operator*(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  require_same_ambient(a, b);
  MultiAffinePoly out(a.n_);
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma & mb)
        throw DomainError(DomainCode::kNotMultiaffine,
                          "product repeats " + monomial_to_string(ma & mb));
      out.add_term(ma | mb, ca * cb);
    }
  }
  return out;
}

bool operator==(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  require_same_ambient(a, b);
  return a.terms_ == b.terms_;
}

namespace {

// Multivariate Horner over ascending keys: the terms carrying the highest
// variable form a suffix, so f = f_low + v * f_high recursively.
GaussInt horner(std::vector<Monomial>& keys, const std::vector<Int>& coeffs, std::size_t first,
                std::size_t last, const std::array<GaussInt, 64>& values) {
  if (first == last) return {};
  if (keys[last - 1] == 0) return {coeffs[first], 0};
  const int top = 63 - std::countl_zero(keys[last - 1]);
  const Monomial top_bit = Monomial{1} << top;
  const auto split = static_cast<std::size_t>(
      std::lower_bound(keys.begin() + static_cast<std::ptrdiff_t>(first),
                       keys.begin() + static_cast<std::ptrdiff_t>(last), top_bit) -
      keys.begin());
  for (std::size_t k = split; k < last; ++k) keys[k] &= ~top_bit;
  const GaussInt high = horner(keys, coeffs, split, last, values);
  GaussInt low = horner(keys, coeffs, first, split, values);
  return low + values[static_cast<std::size_t>(top)] * high;
}

}  // namespace

GaussRat MultiAffinePoly::evaluate(const std::array<GaussRat, 64>& values) const {
  return HornerEvaluator(*this)(values);
}

HornerEvaluator::HornerEvaluator(const MultiAffinePoly& f) {
  for (const auto& [m, c] : f.sorted_terms()) {
    keys_.push_back(m);
    coeffs_.push_back(c);
    degrees_.push_back(monomial_degree(m));
    support_ |= m;
    max_degree_ = std::max(max_degree_, degrees_.back());
  }
}

GaussRat HornerEvaluator::operator()(const std::array<GaussRat, 64>& values) const {
  if (keys_.empty()) return {};
  Int common = 1;
  for (int bit = 0; bit < 64; ++bit) {
    if (!(support_ >> bit & 1)) continue;
    const GaussRat& v = values[static_cast<std::size_t>(bit)];
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.re.get_den_mpz_t());
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.im.get_den_mpz_t());
  }
  std::array<GaussInt, 64> scaled{};
  for (int bit = 0; bit < 64; ++bit) {
    if (!(support_ >> bit & 1)) continue;
    const GaussRat& v = values[static_cast<std::size_t>(bit)];
    scaled[static_cast<std::size_t>(bit)] = {v.re.get_num() * (common / v.re.get_den()),
                                             v.im.get_num() * (common / v.im.get_den())};
  }
  std::vector<Int> powers{1};
  for (int k = 1; k <= max_degree_; ++k) powers.push_back(powers.back() * common);
  std::vector<Monomial> keys = keys_;
  std::vector<Int> coeffs;
  coeffs.reserve(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    coeffs.push_back(coeffs_[k] * powers[static_cast<std::size_t>(max_degree_ - degrees_[k])]);
  const GaussInt sum = horner(keys, coeffs, 0, keys.size(), scaled);
  const Int& denom = powers[static_cast<std::size_t>(max_degree_)];
  return {make_rat(sum.re, denom), make_rat(sum.im, denom)};
}

SparsePoly::SparsePoly(const MultiAffinePoly& f) {
  for (const auto& [m, c] : f.terms()) {
    Exponents e{};
    for (int bit = 0; bit < 64; ++bit)
      if (m >> bit & 1) e[static_cast<std::size_t>(bit)] = 1;
    add_term(e, c);
  }
}

SparsePoly SparsePoly::constant(const Int& c) {
  SparsePoly out;
  out.add_term(Exponents{}, c);
  return out;
}

SparsePoly SparsePoly::linear(std::initializer_list<VarId> vars) {
  SparsePoly out;
  for (VarId v : vars) {
    Exponents e{};
    e[static_cast<std::size_t>(std::countr_zero(bit_of(v)))] = 1;
    out.add_term(e, 1);
  }
  return out;
}

bool SparsePoly::is_multiaffine() const {
  for (const auto& [e, c] : terms_)
    for (auto p : e)
      if (p > 1) return false;
  return true;
}

void SparsePoly::add_term(const Exponents& e, const Int& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      SparsePoly::Exponents e{};
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << '-';
    first = false;
    std::string vars;
    for (int bit = 0; bit < 64; ++bit) {
      const int p = e[static_cast<std::size_t>(bit)];
      if (p == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += segeuler::to_string(var_of_bit(bit));
      if (p > 1) vars += "^" + std::to_string(p);
    }
    const Int mag = abs(c);
    if (vars.empty()) out << mag.get_str();
    else if (mag == 1) out << vars;
    else out << mag.get_str() << '*' << vars;
  }
  return out.str();
}

SparsePoly partial_derivative(const SparsePoly& f, VarId v) {
  const auto index = static_cast<std::size_t>(std::countr_zero(bit_of(v)));
  SparsePoly out;
  for (const auto& [e, c] : f.terms()) {
    if (e[index] == 0) continue;
    SparsePoly::Exponents d = e;
    --d[index];
    out.add_term(d, c * e[index]);
  }
  return out;
}

std::string MultiAffinePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const Int mag = abs(c);
    if (m == 0)
      out << mag.get_str();
    else if (mag == 1)
      out << monomial_to_string(m);
    else
      out << mag.get_str() << '*' << monomial_to_string(m);
  }
  return out.str();
}

MultiAffinePoly scale(const MultiAffinePoly& f, const Int& factor) {
  MultiAffinePoly out = f;
  out *= factor;
  return out;
}

MultiAffinePoly partial_derivative(const MultiAffinePoly& f, VarId v) {
  f.check_position(v);
  const Monomial b = bit_of(v);
  MultiAffinePoly out(f.n_);
  for (const auto& [m, c] : f.terms_)
    if (m & b) out.add_term(m & ~b, c);
  return out;
}

MultiAffinePoly apply_raising_operator(const MultiAffinePoly& f, VarId from, VarId to) {
  f.check_position(to);
  const MultiAffinePoly derived = partial_derivative(f, from);
  const Monomial tb = bit_of(to);
  MultiAffinePoly out = f;
  for (const auto& [m, c] : derived.terms()) {
    if (m & tb)
      throw DomainError(DomainCode::kNotMultiaffine,
                        "operator would square " + to_string(to) + " in " + monomial_to_string(m));
    out.add_term(m | tb, c);
  }
  return out;
}

}  // namespace segeuler
