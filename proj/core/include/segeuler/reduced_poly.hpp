#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "segeuler/bipoly.hpp"
#include "segeuler/multiaffine.hpp"
#include "segeuler/rational.hpp"

namespace segeuler {

/// Result of diagonalizing and specializing a multiaffine polynomial.
///
/// Each term keeps the untouched multiaffine variables as a residual mask and
/// the powers of the shared variables introduced by diagonalization. Shared
/// variables are named ("t", "q", "x", ...), in order of first introduction.
class ReducedPoly {
 public:
  struct Key {
    Monomial residual = 0;
    std::vector<int> powers;  // indexed like shared_names()

    friend auto operator<=>(const Key&, const Key&) = default;
  };
  using Terms = std::map<Key, Rat>;

  ReducedPoly() = default;
  explicit ReducedPoly(const MultiAffinePoly& f);

  const std::vector<std::string>& shared_names() const { return names_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const ReducedPoly&, const ReducedPoly&) = default;

  std::string to_string() const;

 private:
  friend ReducedPoly diagonalize(const ReducedPoly&, VarClass, const std::string&);
  friend ReducedPoly specialize(const ReducedPoly&, VarId, const Rat&);
  friend ReducedPoly specialize(const ReducedPoly&, VarClass, const Rat&);
  friend ReducedPoly specialize(const ReducedPoly&, const std::string&, const Rat&);

  void add(Key key, const Rat& c);
  int shared_index(const std::string& name);

  std::vector<std::string> names_;
  Terms terms_;
};

/// Replaces every variable of `cls` by the shared variable `target`.
ReducedPoly diagonalize(const ReducedPoly& f, VarClass cls, const std::string& target);
ReducedPoly diagonalize(const MultiAffinePoly& f, VarClass cls, const std::string& target);

/// Substitutes `value` for a single variable.
ReducedPoly specialize(const ReducedPoly& f, VarId v, const Rat& value);
ReducedPoly specialize(const MultiAffinePoly& f, VarId v, const Rat& value);
/// Substitutes `value` for every variable of a class.
ReducedPoly specialize(const ReducedPoly& f, VarClass cls, const Rat& value);
/// Substitutes `value` for a shared variable.
ReducedPoly specialize(const ReducedPoly& f, const std::string& shared, const Rat& value);

/// Specialization of a BiPoly variable; a polynomial in the other variable.
UniPoly specialize(const BiPoly& f, BiVar var, const Rat& value);

/// Reads f as a polynomial in shared variables t_name and q_name. Throws
/// DomainError(kUnresolved) if any multiaffine variable or other shared
/// variable survives.
BiPoly to_bipoly(const ReducedPoly& f, const std::string& t_name, const std::string& q_name);

}  // namespace segeuler
