#include "segeuler/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace segeuler {

BiPoly BiPoly::constant(const Rat& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rat& c, int t_power, int q_power) {
  BiPoly out;
  out.add_term(t_power, q_power, c);
  return out;
}

BiPoly BiPoly::from_uni(const UniPoly& f, BiVar var) {
  BiPoly out;
  for (int k = 0; k <= f.degree(); ++k) {
    if (var == BiVar::kT)
      out.add_term(k, 0, f.coeff(k));
    else
      out.add_term(0, k, f.coeff(k));
  }
  return out;
}

Rat BiPoly::coeff(int i, int j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? Rat(0) : it->second;
}

void BiPoly::add_term(int i, int j, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int BiPoly::degree_in(BiVar var) const {
  int best = UniPoly::kZeroDegree;
  for (const auto& [e, c] : terms_) best = std::max(best, var == BiVar::kT ? e.first : e.second);
  return best;
}

int BiPoly::total_degree() const {
  int best = UniPoly::kZeroDegree;
  for (const auto& [e, c] : terms_) best = std::max(best, e.first + e.second);
  return best;
}

UniPoly BiPoly::specialize(BiVar var, const Rat& value) const {
  std::vector<Rat> out;
  for (const auto& [e, c] : terms_) {
    const auto [kept, gone] = var == BiVar::kT ? std::pair{e.second, e.first} : std::pair{e.first, e.second};
    if (static_cast<int>(out.size()) <= kept) out.resize(static_cast<std::size_t>(kept) + 1);
    Rat power = 1;
    for (int k = 0; k < gone; ++k) power *= value;
    out[static_cast<std::size_t>(kept)] += c * power;
  }
  return UniPoly(std::move(out));
}

std::vector<UniPoly> BiPoly::slices(BiVar var) const {
  std::vector<std::vector<Rat>> raw;
  for (const auto& [e, c] : terms_) {
    const auto [index, power] = var == BiVar::kQ ? std::pair{e.second, e.first} : std::pair{e.first, e.second};
    if (static_cast<int>(raw.size()) <= index) raw.resize(static_cast<std::size_t>(index) + 1);
    auto& slice = raw[static_cast<std::size_t>(index)];
    if (static_cast<int>(slice.size()) <= power) slice.resize(static_cast<std::size_t>(power) + 1);
    slice[static_cast<std::size_t>(power)] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& s : raw) out.emplace_back(std::move(s));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

GaussRat BiPoly::evaluate(const GaussRat& t, const GaussRat& q) const {
  std::vector<GaussRat> tp{GaussRat(1)};
  std::vector<GaussRat> qp{GaussRat(1)};
  const int dt = std::max(0, degree_in(BiVar::kT));
  const int dq = std::max(0, degree_in(BiVar::kQ));
  for (int k = 1; k <= dt; ++k) tp.push_back(tp.back() * t);
  for (int k = 1; k <= dq; ++k) qp.push_back(qp.back() * q);
  GaussRat acc;
  for (const auto& [e, c] : terms_) {
    const GaussRat m = tp[static_cast<std::size_t>(e.first)] * qp[static_cast<std::size_t>(e.second)];
    acc = acc + GaussRat(m.re * c, m.im * c);
  }
  return acc;
}

Rat BiPoly::coefficient_sum() const {
  Rat sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rat& factor) {
  if (sgn(factor) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= factor;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rat>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    const int dl = l.first.first + l.first.second;
    const int dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first.first > r.first.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    const Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::string vars;
    auto append = [&](const char* name, int p) {
      if (p == 0) return;
      if (!vars.empty()) vars += '*';
      vars += name;
      if (p > 1) vars += "^" + std::to_string(p);
    };
    append("t", e.first);
    append("q", e.second);
    if (vars.empty())
      out << segeuler::to_string(mag);
    else if (mag == 1)
      out << vars;
    else
      out << segeuler::to_string(mag) << '*' << vars;
  }
  return out.str();
}

BiPoly scale(const BiPoly& f, const Rat& factor) { return f * factor; }

BiPoly binomial_expand_sum(std::span<const Rat> coeffs) {
  const int n = static_cast<int>(coeffs.size());
  BiPoly result;
  if (n == 0) return result;
  const BiPoly t_plus_q = BiPoly::monomial(1, 1, 0) + BiPoly::monomial(1, 0, 1);
  const BiPoly one_plus_q = BiPoly::constant(1) + BiPoly::monomial(1, 0, 1);
  std::vector<BiPoly> tq_pow{BiPoly::constant(1)};
  std::vector<BiPoly> oq_pow{BiPoly::constant(1)};
  for (int k = 1; k < n; ++k) {
    tq_pow.push_back(tq_pow.back() * t_plus_q);
    oq_pow.push_back(oq_pow.back() * one_plus_q);
  }
  for (int k = 0; k < n; ++k) {
    if (sgn(coeffs[static_cast<std::size_t>(k)]) == 0) continue;
    result += (tq_pow[static_cast<std::size_t>(k)] * oq_pow[static_cast<std::size_t>(n - 1 - k)]) *
              coeffs[static_cast<std::size_t>(k)];
  }
  return result;
}

}  // namespace segeuler
