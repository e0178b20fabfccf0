#include "segeuler/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <thread>

#include "segeuler/bipoly.hpp"
#include "segeuler/errors.hpp"
#include "segeuler/eulerbase.hpp"
#include "segeuler/genmultivar.hpp"
#include "segeuler/report_cache.hpp"
#include "segeuler/rootcert.hpp"

namespace segeuler {

namespace {

using Witness = nlohmann::json;
// Returns a null witness on success.
using CellFn = std::function<Witness(int n)>;

VerificationReport run_cells(const std::string& check, const std::string& params, int n_max, const CellFn& fn,
                             const VerifyOptions& options, bool parallel) {
  std::vector<CellResult> cells(static_cast<std::size_t>(std::max(n_max, 0)));
  std::vector<std::exception_ptr> errors(cells.size());

  auto run_one = [&](std::size_t idx) {
    const int n = static_cast<int>(idx) + 1;
    const std::string key = ReportCache::key(check, n, params);
    if (options.cache != nullptr && !options.force) {
      if (auto hit = options.cache->lookup(key)) {
        cells[idx] = cell_from_json(*hit);
        return;
      }
    }
    const auto start = std::chrono::steady_clock::now();
    Witness w = fn(n);
    const auto stop = std::chrono::steady_clock::now();
    CellResult cell{check, n, w.is_null(), std::move(w),
                    std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count()};
    if (options.cache != nullptr) options.cache->store(key, to_json(cell));
    cells[idx] = std::move(cell);
  };

  const int workers = parallel ? std::max(1, std::min<int>(options.threads, static_cast<int>(cells.size()))) : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    {
      std::vector<std::jthread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
              run_one(i);
            } catch (...) {
              errors[i] = std::current_exception();
            }
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return {check, std::move(cells)};
}

std::string param_string(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ',';
    out.append(k).append("=").append(v);
  }
  return out;
}

Witness first_difference(const MultiAffinePoly& lhs, const MultiAffinePoly& rhs) {
  auto a = lhs.sorted_terms();
  auto b = rhs.sorted_terms();
  std::size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  Monomial m = i < a.size() ? a[i].first : b[i].first;
  if (i < a.size() && i < b.size()) m = std::min(a[i].first, b[i].first);
  return {{"monomial", monomial_to_string(m)},
          {"operator_side", to_string(lhs.coeff(m))},
          {"direct_side", to_string(rhs.coeff(m))},
          {"operator_terms", lhs.size()},
          {"direct_terms", rhs.size()}};
}

std::vector<Int> int_coeffs(const UniPoly& p) {
  std::vector<Int> out;
  for (const Rat& c : p.coeffs()) out.push_back(c.get_num());
  return out;
}

nlohmann::json int_list(std::span<const Int> seq) {
  nlohmann::json a = nlohmann::json::array();
  for (const Int& v : seq) a.push_back(to_string(v));
  return a;
}

nlohmann::json gauss_json(const GaussRat& z) {
  return {{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

Witness probe_witness(const ProbeReport& rep) {
  if (!rep.zero_found) return nullptr;
  nlohmann::json point = nlohmann::json::object();
  for (const auto& [name, v] : rep.witness) point[name] = gauss_json(v);
  return {{"samples", rep.samples}, {"point", point}};
}

std::uint64_t cell_seed(std::uint64_t seed, const std::string& check, int n) {
  return seed ^ fnv1a(check + "#" + std::to_string(n));
}

void check_sequence(std::span<const Int> seq) {
  if (seq.empty()) throw UsageError("empty sequence");
  for (const Int& v : seq) {
    if (sgn(v) < 0) throw RangeError("negative entry " + to_string(v));
  }
}

}  // namespace

nlohmann::json to_json(const CellResult& cell) {
  return {{"check", cell.check},
          {"n", cell.n},
          {"verdict", cell.verdict},
          {"witness", cell.witness},
          {"millis", cell.millis}};
}

CellResult cell_from_json(const nlohmann::json& j) {
  return {j.at("check").get<std::string>(), j.at("n").get<int>(), j.at("verdict").get<bool>(), j.at("witness"),
          j.at("millis").get<std::int64_t>()};
}

bool VerificationReport::all_passed() const { return first_failure() == nullptr; }

const CellResult* VerificationReport::first_failure() const {
  for (const CellResult& c : cells) {
    if (!c.verdict) return &c;
  }
  return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json a = nlohmann::json::array();
  for (const CellResult& c : cells) a.push_back(segeuler::to_json(c));
  return a;
}

void VerificationReport::append(const VerificationReport& other) {
  cells.insert(cells.end(), other.cells.begin(), other.cells.end());
}

VerificationReport check_operator_identity(int n_max, const VerifyOptions& options) {
  if (n_max > kBuildAlphaLimit) {
    throw ResourceError("operator identity needs n <= " + std::to_string(kBuildAlphaLimit));
  }
  return run_cells(
      "operator_identity", "", n_max,
      [](int n) -> Witness {
        MultiAffinePoly lhs = apply_segment_operators(build_A(n), n);
        MultiAffinePoly rhs = build_alpha_direct(n);
        if (lhs == rhs) return nullptr;
        return first_difference(lhs, rhs);
      },
      options, true);
}

VerificationReport check_closed_forms(int n_max, int streaming_max, const VerifyOptions& options) {
  const StreamingOptions stream{options.threads, std::max(kStreamingDefaultLimit, streaming_max)};
  return run_cells(
      "closed_forms", param_string({{"streaming_max", std::to_string(streaming_max)}}), n_max,
      [&](int n) -> Witness {
        BiPoly closed = closed_alpha(n);
        if (n <= streaming_max) {
          BiPoly streamed = streaming_alpha(n, stream);
          if (streamed != closed) {
            return {{"leg", "closed_alpha vs enumeration"},
                    {"closed", closed.to_string()},
                    {"enumerated", streamed.to_string()}};
          }
        }
        UniPoly p = closed_P(n);
        UniPoly at_one = closed.specialize(BiVar::kQ, 1);
        if (p != at_one) {
          return {{"leg", "P_n vs alpha_n(t, 1)"}, {"P", p.to_string()}, {"alpha_at_q1", at_one.to_string()}};
        }
        Int expected = factorial(n) * (Int(1) << (n - 1));
        Rat sum = closed.coefficient_sum();
        if (sum != Rat(expected)) {
          return {{"leg", "coefficient sum"}, {"sum", to_string(sum)}, {"expected", to_string(expected)}};
        }
        return nullptr;
      },
      options, false);
}

VerificationReport check_convolution(int n_max, const VerifyOptions& options) {
  const StreamingOptions stream{options.threads, kStreamingDefaultLimit};
  return run_cells(
      "convolution", "", n_max,
      [&](int n) -> Witness {
        DesSegCounts counts = streaming_counts(n, stream);
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            Int formula = k_convolution(n, i, j);
            Int enumerated = Int(static_cast<unsigned long>(counts.at(i, j)));
            if (formula != enumerated) {
              return {{"i", i}, {"j", j}, {"formula", to_string(formula)}, {"enumerated", to_string(enumerated)}};
            }
          }
        }
        return nullptr;
      },
      options, false);
}

VerificationReport check_specializations(int n_max, const VerifyOptions& options) {
  return run_cells(
      "specializations", "", n_max,
      [](int n) -> Witness {
        BiPoly alpha = closed_alpha(n);
        UniPoly at_q0 = alpha.specialize(BiVar::kQ, 0);
        UniPoly eul = eulerian_poly(n);
        if (at_q0 != eul) {
          return {{"leg", "q = 0"}, {"alpha", at_q0.to_string()}, {"eulerian", eul.to_string()}};
        }
        UniPoly at_t0 = alpha.specialize(BiVar::kT, 0);
        UniPoly bell = ordered_bell_poly(n);
        if (at_t0 != bell) {
          return {{"leg", "t = 0"}, {"alpha", at_t0.to_string()}, {"ordered_bell", bell.to_string()}};
        }
        return nullptr;
      },
      options, true);
}

VerificationReport check_gf_remark(int n_max, int m_max, int precision_exponent, const VerifyOptions& options) {
  if (n_max > 6 || m_max < 0 || m_max > 5) throw RangeError("gf remark check needs n_max <= 6 and 0 <= m_max <= 5");
  if (precision_exponent < 0) throw RangeError("precision exponent must be nonnegative");
  constexpr int kCutoffBudget = 1 << 14;
  Int ten_pow = 1;
  for (int i = 0; i < precision_exponent; ++i) ten_pow *= 10;
  const Rat epsilon = make_rat(1, ten_pow);
  return run_cells(
      "gf_remark",
      param_string({{"m_max", std::to_string(m_max)}, {"precision", std::to_string(precision_exponent)}}), n_max,
      [&](int n) -> Witness {
        for (int m = 0; m <= m_max; ++m) {
          Rat target = gf_target(n, m);
          int cutoff = gf_min_cutoff(n, m);
          GfBracket br = gf_partial_sum(n, m, cutoff);
          while (br.tail_bound >= epsilon) {
            cutoff *= 2;
            if (cutoff > kCutoffBudget) {
              throw ResourceError("gf remark: tail bound above 10^-" + std::to_string(precision_exponent) +
                                  " at cutoff budget " + std::to_string(kCutoffBudget));
            }
            br = gf_partial_sum(n, m, cutoff);
          }
          if (target < br.partial || target > br.partial + br.tail_bound) {
            return {{"m", m},
                    {"target", to_string(target)},
                    {"partial", to_string(br.partial)},
                    {"tail_bound", to_string(br.tail_bound)},
                    {"cutoff", br.cutoff}};
          }
        }
        return nullptr;
      },
      options, true);
}

VerificationReport check_real_rootedness(int n_max_p, int n_max_kl, const VerifyOptions& options) {
  return run_cells(
      "real_rootedness", param_string({{"n_max_p", std::to_string(n_max_p)}, {"n_max_kl", std::to_string(n_max_kl)}}),
      std::max(n_max_p, n_max_kl),
      [&](int n) -> Witness {
        if (n <= n_max_p) {
          UniPoly p = closed_P(n);
          if (!is_real_rooted(p)) {
            return {{"leg", "P_n"},
                    {"poly", p.to_string()},
                    {"sturm", to_json(sturm_chain(p))}};
          }
        }
        if (n <= n_max_kl) {
          BiPoly alpha = closed_alpha(n);
          for (BiVar var : {BiVar::kQ, BiVar::kT}) {
            TheoremZReport rep = verify_theorem_z(alpha, var);
            if (!rep.verdict) return {{"leg", var == BiVar::kQ ? "K slices" : "L slices"}, {"report", to_json(rep)}};
          }
        }
        return nullptr;
      },
      options, true);
}

VerificationReport check_conjecture(int n_max, const VerifyOptions& options) {
  return run_cells(
      "conjecture", "", n_max,
      [](int n) -> Witness {
        BiPoly alpha = closed_alpha(n);
        struct Row {
          std::string name;
          std::vector<Int> seq;
          const UniPoly* poly;
        };
        UniPoly p = closed_P(n);
        std::vector<UniPoly> k_slices = alpha.slices(BiVar::kQ);
        std::vector<UniPoly> l_slices = alpha.slices(BiVar::kT);
        std::vector<Row> rows;
        rows.push_back({"T(n,k)", int_coeffs(p), &p});
        for (int j = 0; j < n; ++j) {
          std::vector<Int> seq;
          for (int i = 0; i + j <= n - 1; ++i) seq.push_back(alpha.coeff(i, j).get_num());
          rows.push_back({"K(n,i," + std::to_string(j) + ")", seq, &k_slices[static_cast<std::size_t>(j)]});
        }
        for (int i = 0; i < n; ++i) {
          std::vector<Int> seq;
          for (int j = 0; i + j <= n - 1; ++j) seq.push_back(alpha.coeff(i, j).get_num());
          rows.push_back({"K(n," + std::to_string(i) + ",j)", seq, &l_slices[static_cast<std::size_t>(i)]});
        }
        for (const Row& row : rows) {
          bool uni = is_unimodal(row.seq);
          bool lc = is_log_concave(row.seq);
          bool rr = is_real_rooted(*row.poly);
          bool newton = rr && int_coeffs(*row.poly) == row.seq && satisfies_newton(row.seq);
          if (!uni || !lc || !newton) {
            return {{"sequence", row.name},
                    {"values", int_list(row.seq)},
                    {"unimodal", uni},
                    {"log_concave", lc},
                    {"internal_zero", has_internal_zero(row.seq)},
                    {"real_rooted", rr},
                    {"newton", newton}};
          }
        }
        return nullptr;
      },
      options, true);
}

VerificationReport check_stability_probes(const ProbeLimits& limits, const VerifyOptions& options) {
  const std::string params =
      param_string({{"samples", std::to_string(limits.samples)}, {"seed", std::to_string(options.seed)}});
  VerificationReport out{"stability_probes", {}};
  out.append(run_cells(
      "stability_A", params, limits.n_max_a,
      [&](int n) {
        return probe_witness(probe_stability(build_A(n), limits.samples, cell_seed(options.seed, "A", n)));
      },
      options, true));
  out.append(run_cells(
      "stability_alpha", params, limits.n_max_alpha,
      [&](int n) {
        return probe_witness(
            probe_stability(build_alpha_direct(n), limits.samples, cell_seed(options.seed, "alpha", n)));
      },
      options, true));
  out.append(run_cells(
      "stability_alpha_tq", params, limits.n_max_tq,
      [&](int n) {
        return probe_witness(probe_stability(closed_alpha(n), limits.samples, cell_seed(options.seed, "tq", n)));
      },
      options, true));
  return out;
}

bool is_unimodal(std::span<const Int> seq) {
  check_sequence(seq);
  std::size_t k = 1;
  while (k < seq.size() && seq[k - 1] <= seq[k]) ++k;
  while (k < seq.size() && seq[k - 1] >= seq[k]) ++k;
  return k == seq.size();
}

bool is_log_concave(std::span<const Int> seq) {
  check_sequence(seq);
  for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
    if (seq[k] * seq[k] < seq[k - 1] * seq[k + 1]) return false;
  }
  return true;
}

bool has_internal_zero(std::span<const Int> seq) {
  check_sequence(seq);
  auto first = std::find_if(seq.begin(), seq.end(), [](const Int& v) { return sgn(v) != 0; });
  auto last = std::find_if(seq.rbegin(), seq.rend(), [](const Int& v) { return sgn(v) != 0; });
  if (first == seq.end()) return false;
  return std::any_of(first, last.base(), [](const Int& v) { return sgn(v) == 0; });
}

bool satisfies_newton(std::span<const Int> seq) {
  check_sequence(seq);
  const long d = static_cast<long>(seq.size()) - 1;
  for (long k = 1; k < d; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    Int lhs = seq[ku] * seq[ku] * k * (d - k);
    Int rhs = seq[ku - 1] * seq[ku + 1] * (k + 1) * (d - k + 1);
    if (lhs < rhs) return false;
  }
  return true;
}

}  // namespace segeuler
