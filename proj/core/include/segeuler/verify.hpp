#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "segeuler/rational.hpp"

namespace segeuler {

class ReportCache;

/// Default probe seed used by the CLI and the acceptance suite.
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Outcome of one (check, n) cell. On failure the witness holds enough data
/// to re-check the claim independently; on success it is null.
struct CellResult {
  std::string check;
  int n = 0;
  bool verdict = false;
  nlohmann::json witness;
  std::int64_t millis = 0;
};

nlohmann::json to_json(const CellResult& cell);
CellResult cell_from_json(const nlohmann::json& j);

struct VerificationReport {
  std::string check;
  std::vector<CellResult> cells;  ///< ordered by (check, n)

  bool all_passed() const;
  /// First failing cell, or nullptr.
  const CellResult* first_failure() const;
  /// Array of cell objects.
  nlohmann::json to_json() const;
  void append(const VerificationReport& other);
};

struct VerifyOptions {
  /// Workers for independent cells, or for the streaming enumeration inside
  /// the enumeration-backed checks.
  int threads = 1;
  std::uint64_t seed = kDefaultSeed;
  /// Optional result store; cells found there are not recomputed unless force.
  ReportCache* cache = nullptr;
  bool force = false;
};

/// Operator product applied to A_n against the direct alpha_n, n = 1..n_max.
VerificationReport check_operator_identity(int n_max, const VerifyOptions& options = {});

/// closed_alpha against streaming_alpha for n <= min(n_max, streaming_max);
/// closed_P against alpha at q = 1 and the coefficient sum n! 2^(n-1) for all
/// n <= n_max.
VerificationReport check_closed_forms(int n_max, int streaming_max, const VerifyOptions& options = {});

/// k_convolution(n, i, j) against the enumerated counts, every i, j.
VerificationReport check_convolution(int n_max, const VerifyOptions& options = {});

/// alpha_n(t, 0) = A_n(t) and alpha_n(0, q) = ordered Bell polynomial.
VerificationReport check_specializations(int n_max, const VerifyOptions& options = {});

/// Coefficients t^m (m <= m_max) of P_n / (1-t)^(n+1) inside the certified
/// series bracket with tail below 10^-precision_exponent. n_max <= 6,
/// m_max <= 5. Throws ResourceError if the cutoff budget runs out.
VerificationReport check_gf_remark(int n_max, int m_max, int precision_exponent,
                                   const VerifyOptions& options = {});

/// P_n real-rooted for n <= n_max_p; both slice directions of alpha_n pass
/// verify_theorem_z for n <= n_max_kl.
VerificationReport check_real_rootedness(int n_max_p, int n_max_kl, const VerifyOptions& options = {});

/// Unimodality and log-concavity of T(n, .), K(n, ., j), K(n, i, .), plus
/// Newton's inequalities on every certified real-rooted row.
VerificationReport check_conjecture(int n_max, const VerifyOptions& options = {});

struct ProbeLimits {
  int n_max_a = 5;
  int n_max_alpha = 5;
  int n_max_tq = 10;
  std::size_t samples = 10000;
};

/// Seeded exact stability probes on A_n(x,y), alpha_n(x,y,z,w), alpha_n(t,q).
VerificationReport check_stability_probes(const ProbeLimits& limits, const VerifyOptions& options = {});

/// Weakly increasing then weakly decreasing. Throws UsageError when empty and
/// RangeError on a negative entry.
bool is_unimodal(std::span<const Int> seq);
/// a_k^2 >= a_{k-1} a_{k+1} for every internal k. Same errors.
bool is_log_concave(std::span<const Int> seq);
/// A zero strictly between two nonzero entries.
bool has_internal_zero(std::span<const Int> seq);
/// a_k^2 >= a_{k-1} a_{k+1} (1 + 1/k)(1 + 1/(d-k)) with d = size - 1; holds
/// for the coefficients of every real-rooted polynomial of degree d.
bool satisfies_newton(std::span<const Int> seq);

}  // namespace segeuler
