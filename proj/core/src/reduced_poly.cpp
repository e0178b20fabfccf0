#include "segeuler/reduced_poly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "segeuler/errors.hpp"

namespace segeuler {

namespace {

Monomial class_mask(VarClass cls) {
  return Monomial{0xFF} << (static_cast<int>(cls) * kMaxPositions);
}

}  // namespace

ReducedPoly::ReducedPoly(const MultiAffinePoly& f) {
  for (const auto& [m, c] : f.terms()) add(Key{m, {}}, Rat(c));
}

void ReducedPoly::add(Key key, const Rat& c) {
  if (sgn(c) == 0) return;
  key.powers.resize(names_.size(), 0);
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int ReducedPoly::shared_index(const std::string& name) {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it != names_.end()) return static_cast<int>(it - names_.begin());
  names_.push_back(name);
  Terms widened;
  for (auto& [key, c] : terms_) {
    Key k = key;
    k.powers.push_back(0);
    widened.emplace(std::move(k), c);
  }
  terms_ = std::move(widened);
  return static_cast<int>(names_.size()) - 1;
}

ReducedPoly diagonalize(const ReducedPoly& f, VarClass cls, const std::string& target) {
  ReducedPoly out;
  out.names_ = f.names_;
  const int index = out.shared_index(target);
  const Monomial mask = class_mask(cls);
  for (const auto& [key, c] : f.terms_) {
    ReducedPoly::Key k{key.residual & ~mask, key.powers};
    k.powers.resize(out.names_.size(), 0);
    k.powers[static_cast<std::size_t>(index)] += std::popcount(key.residual & mask);
    out.add(std::move(k), c);
  }
  return out;
}

ReducedPoly diagonalize(const MultiAffinePoly& f, VarClass cls, const std::string& target) {
  return diagonalize(ReducedPoly(f), cls, target);
}

ReducedPoly specialize(const ReducedPoly& f, VarId v, const Rat& value) {
  const Monomial b = bit_of(v);
  ReducedPoly out;
  out.names_ = f.names_;
  for (const auto& [key, c] : f.terms_) {
    if (key.residual & b)
      out.add({key.residual & ~b, key.powers}, c * value);
    else
      out.add(key, c);
  }
  return out;
}

ReducedPoly specialize(const MultiAffinePoly& f, VarId v, const Rat& value) {
  return specialize(ReducedPoly(f), v, value);
}

ReducedPoly specialize(const ReducedPoly& f, VarClass cls, const Rat& value) {
  const Monomial mask = class_mask(cls);
  ReducedPoly out;
  out.names_ = f.names_;
  for (const auto& [key, c] : f.terms_) {
    Rat factor = 1;
    for (int k = std::popcount(key.residual & mask); k > 0; --k) factor *= value;
    out.add({key.residual & ~mask, key.powers}, c * factor);
  }
  return out;
}

ReducedPoly specialize(const ReducedPoly& f, const std::string& shared, const Rat& value) {
  const auto it = std::find(f.names_.begin(), f.names_.end(), shared);
  if (it == f.names_.end()) return f;
  const auto index = static_cast<std::size_t>(it - f.names_.begin());
  ReducedPoly out;
  out.names_ = f.names_;
  for (const auto& [key, c] : f.terms_) {
    Rat factor = 1;
    for (int k = key.powers[index]; k > 0; --k) factor *= value;
    ReducedPoly::Key k{key.residual, key.powers};
    k.powers[index] = 0;
    out.add(std::move(k), c * factor);
  }
  return out;
}

UniPoly specialize(const BiPoly& f, BiVar var, const Rat& value) { return f.specialize(var, value); }

BiPoly to_bipoly(const ReducedPoly& f, const std::string& t_name, const std::string& q_name) {
  const auto& names = f.shared_names();
  auto find = [&](const std::string& name) -> int {
    const auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? -1 : static_cast<int>(it - names.begin());
  };
  const int ti = find(t_name);
  const int qi = find(q_name);
  BiPoly out;
  for (const auto& [key, c] : f.terms()) {
    if (key.residual != 0)
      throw DomainError(DomainCode::kUnresolved, "variable " + monomial_to_string(key.residual) + " survives");
    for (std::size_t k = 0; k < key.powers.size(); ++k) {
      if (static_cast<int>(k) != ti && static_cast<int>(k) != qi && key.powers[k] != 0)
        throw DomainError(DomainCode::kUnresolved, "shared variable " + names[k] + " survives");
    }
    out.add_term(ti < 0 ? 0 : key.powers[static_cast<std::size_t>(ti)],
                 qi < 0 ? 0 : key.powers[static_cast<std::size_t>(qi)], c);
  }
  return out;
}

std::string ReducedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::string vars;
    for (std::size_t k = 0; k < names_.size(); ++k) {
      if (key.powers[k] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += names_[k];
      if (key.powers[k] > 1) vars += "^" + std::to_string(key.powers[k]);
    }
    if (key.residual != 0) {
      if (!vars.empty()) vars += '*';
      vars += monomial_to_string(key.residual);
    }
    const Rat mag = abs(c);
    if (vars.empty())
      out << segeuler::to_string(mag);
    else if (mag == 1)
      out << vars;
    else
      out << segeuler::to_string(mag) << '*' << vars;
  }
  return out.str();
}

}  // namespace segeuler
