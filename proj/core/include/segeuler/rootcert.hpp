#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "segeuler/bipoly.hpp"
#include "segeuler/rational.hpp"
#include "segeuler/unipoly.hpp"

namespace segeuler {

/// Endpoint of a counting interval: a rational or one of the infinities.
struct Bound {
  enum class Kind { kNegInf, kFinite, kPosInf };
  Kind kind = Kind::kFinite;
  Rat value;

  static Bound neg_inf() { return {Kind::kNegInf, 0}; }
  static Bound pos_inf() { return {Kind::kPosInf, 0}; }
  static Bound at(const Rat& v) { return {Kind::kFinite, v}; }
};

/// Sturm chain of the squarefree part of a polynomial. Every entry is scaled
/// to coprime integer coefficients by a positive factor.
class SturmChain {
 public:
  /// Throws UndefinedInputError on the zero polynomial.
  explicit SturmChain(const UniPoly& f);

  const std::vector<UniPoly>& entries() const { return chain_; }
  /// Sign variations at a bound, zeros skipped.
  int variations(const Bound& at) const;
  /// Distinct real roots in (lo, hi].
  int count(const Bound& lo, const Bound& hi) const;

 private:
  std::vector<UniPoly> chain_;
};

SturmChain sturm_chain(const UniPoly& f);

/// Distinct real roots of f in (lo, hi].
int count_real_roots(const UniPoly& f, const Bound& lo = Bound::neg_inf(), const Bound& hi = Bound::pos_inf());

/// All roots real; constants count as real-rooted. Throws on zero.
bool is_real_rooted(const UniPoly& f);

/// [lo, hi] holding exactly one distinct root; lo == hi for a rational root
/// hit exactly. Non-point intervals never have a root at an endpoint.
struct IsolatingInterval {
  Rat lo;
  Rat hi;
  int multiplicity = 1;

  bool is_point() const { return lo == hi; }
  friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

struct IsolationOptions {
  /// Bisection budget per root on top of the bit length of the root bound.
  int max_bisections = 64;
};

/// Sorted, pairwise disjoint isolating intervals, one per distinct root, with
/// multiplicities from the squarefree decomposition. Throws
/// DomainError(kNotRealRooted) if f has non-real roots and
/// DomainError(kUnresolved) if the budget runs out.
std::vector<IsolatingInterval> isolate_roots(const UniPoly& f, const IsolationOptions& options = {});

/// Bisects an isolating interval of f until hi - lo <= max_width.
IsolatingInterval refine_root(const UniPoly& f, IsolatingInterval interval, const Rat& max_width,
                              int max_bisections = 64);

/// One distinct real number in the merged root list of an interlacing check.
struct MergedRoot {
  IsolatingInterval where;
  int mult_f = 0;
  int mult_g = 0;
};

struct InterlacingCertificate {
  bool verdict = false;
  UniPoly common_factor;                  ///< monic gcd(f, g)
  std::vector<IsolatingInterval> f_roots;
  std::vector<IsolatingInterval> g_roots;
  std::vector<MergedRoot> merged;         ///< ascending, disjoint
  std::string reason;                     ///< empty when verdict holds
};

/// Whether g interlaces f (weakly): ... <= s_2 <= r_2 <= s_1 <= r_1 with r, s
/// the roots of f, g in descending order, counted with multiplicity.
///
/// Requires positive leading coefficients (kNonPositiveLeading), deg f - deg g
/// in {0, 1} (kDegreeGap) and both real-rooted (kNotRealRooted). A constant g
/// interlaces f exactly when deg f <= 1.
InterlacingCertificate interlaces(const UniPoly& g, const UniPoly& f);

struct SturmSequenceResult {
  bool verdict = false;
  std::optional<std::size_t> failed_index;
  std::string reason;
};

/// seq[j] has degree j, positive leading coefficient, only real roots, and
/// seq[j-1] interlaces seq[j]. Throws UsageError on an empty sequence.
SturmSequenceResult generalized_sturm_check(std::span<const UniPoly> seq);

/// f_0, f_1, ... with F = sum_j f_j * var^j; each f_j a polynomial in the
/// other variable.
std::vector<UniPoly> theorem_z_slices(const BiPoly& f, BiVar var);

struct TheoremZReport {
  BiVar var;
  std::vector<UniPoly> slices;
  std::vector<bool> slice_real_rooted;
  /// False when a slice vanishes or has a nonpositive leading coefficient;
  /// such input lies outside the checked form.
  bool applicable = true;
  std::string applicability_note;
  SturmSequenceResult chain;  ///< on the reversed slices (f_n, ..., f_0)
  bool verdict = false;
};

/// Checks every slice for real-rootedness and the reversed slice sequence for
/// being a generalized Sturm sequence.
TheoremZReport verify_theorem_z(const BiPoly& f, BiVar var);

struct HbProbeReport {
  std::size_t samples = 0;
  bool pair_zero_found = false;
  std::vector<std::pair<std::string, GaussRat>> pair_witness;
  bool hb_zero_found = false;
  std::optional<GaussRat> hb_witness;
};

/// fk1(x) + y * fk(x); stable when fk interlaces fk1.
GaussRat pair_form_value(const UniPoly& fk, const UniPoly& fk1, const GaussRat& x, const GaussRat& y);
/// fk1(z) + i * fk(z), the Hermite-Biehler combination.
GaussRat hb_form_value(const UniPoly& fk, const UniPoly& fk1, const GaussRat& z);

/// Falsification probe for consecutive entries fk, fk1 of a generalized Sturm
/// sequence (fk interlaces fk1): neither form above should vanish when all
/// arguments lie in the open upper half-plane. Exact evaluation at seeded
/// Gaussian-rational points.
HbProbeReport hb_pair_probe(const UniPoly& fk, const UniPoly& fk1, std::size_t samples, std::uint64_t seed);

nlohmann::json to_json(const SturmChain& chain);
nlohmann::json to_json(const IsolatingInterval& interval);
nlohmann::json to_json(const InterlacingCertificate& cert);
nlohmann::json to_json(const SturmSequenceResult& result);
nlohmann::json to_json(const TheoremZReport& report);
nlohmann::json to_json(const HbProbeReport& report);

}  // namespace segeuler
