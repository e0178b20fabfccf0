#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "segeuler/rational.hpp"

namespace segeuler {

class BiPoly;

/// Exact counting table for one n: A(n,k), T(n,k) or K(n,i,j).
class CountTriangle {
 public:
  enum class Kind { kEulerianA, kSegT, kSegK };

  struct Entry {
    int i;
    std::optional<int> j;  ///< only for kSegK
    Int count;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  CountTriangle(Kind kind, int n, std::vector<Entry> entries);

  /// Tables from the closed forms.
  static CountTriangle eulerian(int n);
  static CountTriangle seg_t(int n);
  static CountTriangle seg_k(int n);
  /// K(n,i,j) read from a (des, seg) polynomial such as alpha_n(t,q).
  static CountTriangle seg_k_from(int n, const BiPoly& alpha);
  /// T(n,k) from a (des, seg) polynomial by summing over seg.
  static CountTriangle seg_t_from(int n, const BiPoly& alpha);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  const std::vector<Entry>& entries() const { return entries_; }
  Int total() const;

  /// {"kind": "T"|"K"|"A", "n": int, "entries": [{"i", "j"?, "count": "<decimal>"}]}
  nlohmann::json to_json() const;
  static CountTriangle from_json(const nlohmann::json& j);
  /// Header "k,count" for A/T and "i,j,count" for K.
  std::string to_csv() const;
  std::string to_markdown() const;

  friend bool operator==(const CountTriangle&, const CountTriangle&) = default;

 private:
  Kind kind_;
  int n_;
  std::vector<Entry> entries_;
};

const char* kind_tag(CountTriangle::Kind kind) noexcept;

}  // namespace segeuler
