#include "segeuler/rootcert.hpp"

#include <algorithm>
#include <cstdlib>

#include "segeuler/errors.hpp"
#include "segeuler/sampling.hpp"

namespace segeuler {

namespace {

int sign_at(const UniPoly& p, const Bound& at) {
  switch (at.kind) {
    case Bound::Kind::kNegInf:
      return p.sign_at_neg_inf();
    case Bound::Kind::kPosInf:
      return p.sign_at_pos_inf();
    case Bound::Kind::kFinite:
      break;
  }
  return p.sign_at(at.value);
}

bool less(const Bound& a, const Bound& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  return a.kind == Bound::Kind::kFinite && a.value < b.value;
}

void require_nonzero(const UniPoly& f, const char* what) {
  if (f.is_zero()) throw UndefinedInputError(std::string(what) + ": zero polynomial");
}

// Power of two strictly above every |root| (Cauchy bound); also its exponent.
std::pair<Rat, int> root_bound(const UniPoly& f) {
  Rat m = 0;
  const Rat& lc = f.leading();
  for (int k = 0; k < f.degree(); ++k) {
    Rat r = abs(f.coeff(k) / lc);
    if (r > m) m = r;
  }
  Rat bound = 1 + m;
  Rat p = 1;
  int e = 0;
  while (p <= bound) {
    p *= 2;
    ++e;
  }
  return {p, e};
}

[[noreturn]] void unresolved(const UniPoly& f) {
  throw DomainError(DomainCode::kUnresolved,
                    "root isolation exceeded its bisection budget for " + f.to_string());
}

// Root isolation on a squarefree, real-rooted polynomial.
class Isolator {
 public:
  Isolator(const UniPoly& s, const IsolationOptions& options) : s_(s), chain_(s) {
    auto [b, e] = root_bound(s);
    bound_ = b;
    budget_ = options.max_bisections + e + 2;
  }

  int count(const Rat& lo, const Rat& hi) const {
    return chain_.count(Bound::at(lo), Bound::at(hi));
  }

  std::vector<IsolatingInterval> run() {
    struct Item {
      Rat lo, hi;
      int roots;
      int depth;
    };
    std::vector<IsolatingInterval> out;
    std::vector<Item> stack;
    int total = count(-bound_, bound_);
    if (total > 0) stack.push_back({-bound_, bound_, total, 0});
    while (!stack.empty()) {
      Item it = std::move(stack.back());
      stack.pop_back();
      if (it.roots == 1) {
        out.push_back(finish(it.lo, it.hi));
        continue;
      }
      if (it.depth >= budget_) unresolved(s_);
      Rat mid = (it.lo + it.hi) / 2;
      int left = count(it.lo, mid);
      if (it.roots - left > 0) stack.push_back({mid, it.hi, it.roots - left, it.depth + 1});
      if (left > 0) stack.push_back({it.lo, mid, left, it.depth + 1});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    detach(out);
    return out;
  }

  // One bisection step on an interval holding one root in its interior.
  // Returns true if the midpoint was the root.
  bool step(IsolatingInterval& iv) const {
    Rat mid = (iv.lo + iv.hi) / 2;
    if (sgn(s_.evaluate(mid)) == 0) {
      iv.lo = mid;
      iv.hi = mid;
      return true;
    }
    if (count(iv.lo, mid) == 1) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
    return false;
  }

 private:
  // (lo, hi] holds one root; make the closed interval free of roots at its
  // endpoints or collapse it to the root.
  IsolatingInterval finish(const Rat& lo, const Rat& hi) const {
    IsolatingInterval iv{lo, hi, 1};
    if (sgn(s_.evaluate(hi)) == 0) return {hi, hi, 1};
    int steps = 0;
    while (!iv.is_point() && sgn(s_.evaluate(iv.lo)) == 0) {
      if (++steps > budget_) unresolved(s_);
      step(iv);
    }
    return iv;
  }

  void detach(std::vector<IsolatingInterval>& ivs) const {
    for (std::size_t k = 0; k + 1 < ivs.size(); ++k) {
      IsolatingInterval& a = ivs[k];
      int steps = 0;
      while (!a.is_point() && a.hi >= ivs[k + 1].lo) {
        if (++steps > budget_) unresolved(s_);
        step(a);
      }
    }
  }

  UniPoly s_;
  SturmChain chain_;
  Rat bound_;
  int budget_ = 0;
};

bool has_root_in(const UniPoly& p, const IsolatingInterval& iv) {
  if (p.degree() <= 0) return false;
  if (iv.is_point()) return sgn(p.evaluate(iv.lo)) == 0;
  return count_real_roots(p, Bound::at(iv.lo), Bound::at(iv.hi)) > 0;
}

int multiplicity_in(const std::vector<UniPoly>& yun, const IsolatingInterval& iv) {
  for (std::size_t k = 0; k < yun.size(); ++k) {
    if (has_root_in(yun[k], iv)) return static_cast<int>(k) + 1;
  }
  return 0;
}

std::string interval_text(const IsolatingInterval& iv) {
  if (iv.is_point()) return to_string(iv.lo);
  return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
}

nlohmann::json gauss_json(const GaussRat& z) {
  return {{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

}  // namespace

SturmChain::SturmChain(const UniPoly& f) {
  require_nonzero(f, "sturm_chain");
  UniPoly s = squarefree_part(f).integer_primitive();
  chain_.push_back(s);
  if (s.degree() == 0) return;
  chain_.push_back(s.derivative().integer_primitive());
  while (chain_.back().degree() > 0) {
    const UniPoly& a = chain_[chain_.size() - 2];
    const UniPoly& b = chain_.back();
    UniPoly r = divmod(a, b).remainder;
    if (r.is_zero()) break;
    chain_.push_back((-r).integer_primitive());
  }
}

int SturmChain::variations(const Bound& at) const {
  int changes = 0;
  int last = 0;
  for (const UniPoly& p : chain_) {
    int s = sign_at(p, at);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::count(const Bound& lo, const Bound& hi) const {
  if (!less(lo, hi)) return 0;
  return variations(lo) - variations(hi);
}

SturmChain sturm_chain(const UniPoly& f) { return SturmChain(f); }

int count_real_roots(const UniPoly& f, const Bound& lo, const Bound& hi) {
  return SturmChain(f).count(lo, hi);
}

bool is_real_rooted(const UniPoly& f) {
  require_nonzero(f, "is_real_rooted");
  UniPoly s = squarefree_part(f);
  if (s.degree() == 0) return true;
  return SturmChain(s).count(Bound::neg_inf(), Bound::pos_inf()) == s.degree();
}

std::vector<IsolatingInterval> isolate_roots(const UniPoly& f, const IsolationOptions& options) {
  require_nonzero(f, "isolate_roots");
  UniPoly s = squarefree_part(f);
  if (s.degree() == 0) return {};
  int real = SturmChain(s).count(Bound::neg_inf(), Bound::pos_inf());
  if (real != s.degree()) {
    throw DomainError(DomainCode::kNotRealRooted,
                      "Sturm count " + std::to_string(real) + " of distinct real roots is below degree " +
                          std::to_string(s.degree()) + " of the squarefree part of " + f.to_string());
  }
  std::vector<IsolatingInterval> out = Isolator(s, options).run();
  std::vector<UniPoly> yun = squarefree_decomposition(f);
  for (IsolatingInterval& iv : out) iv.multiplicity = multiplicity_in(yun, iv);
  return out;
}

IsolatingInterval refine_root(const UniPoly& f, IsolatingInterval interval, const Rat& max_width,
                              int max_bisections) {
  require_nonzero(f, "refine_root");
  if (sgn(max_width) <= 0) throw RangeError("refine_root: width must be positive");
  UniPoly s = squarefree_part(f);
  int steps = 0;
  while (!interval.is_point() && interval.hi - interval.lo > max_width) {
    if (++steps > max_bisections) unresolved(f);
    Rat mid = (interval.lo + interval.hi) / 2;
    int sm = s.sign_at(mid);
    if (sm == 0) {
      interval.lo = mid;
      interval.hi = mid;
    } else if (sm * s.sign_at(interval.lo) < 0) {
      interval.hi = mid;
    } else {
      interval.lo = mid;
    }
  }
  return interval;
}

InterlacingCertificate interlaces(const UniPoly& g, const UniPoly& f) {
  require_nonzero(f, "interlaces");
  require_nonzero(g, "interlaces");
  if (sgn(f.leading()) <= 0 || sgn(g.leading()) <= 0) {
    throw DomainError(DomainCode::kNonPositiveLeading,
                      "interlaces: nonpositive leading coefficient in " + g.to_string() + " or " + f.to_string());
  }
  int gap = f.degree() - g.degree();
  if (gap != 0 && gap != 1) {
    throw DomainError(DomainCode::kDegreeGap, "interlaces: deg f - deg g = " + std::to_string(gap));
  }
  for (const UniPoly* p : {&g, &f}) {
    if (!is_real_rooted(*p)) {
      throw DomainError(DomainCode::kNotRealRooted, "interlaces: " + p->to_string() + " is not real-rooted");
    }
  }

  InterlacingCertificate cert;
  cert.common_factor = gcd(f, g);

  std::vector<IsolatingInterval> all = isolate_roots(squarefree_part(f * g));
  std::vector<UniPoly> yun_f = squarefree_decomposition(f);
  std::vector<UniPoly> yun_g = squarefree_decomposition(g);
  for (const IsolatingInterval& iv : all) {
    MergedRoot m{iv, multiplicity_in(yun_f, iv), multiplicity_in(yun_g, iv)};
    m.where.multiplicity = 1;
    if (m.mult_f > 0) cert.f_roots.push_back({iv.lo, iv.hi, m.mult_f});
    if (m.mult_g > 0) cert.g_roots.push_back({iv.lo, iv.hi, m.mult_g});
    cert.merged.push_back(std::move(m));
  }

  if (g.degree() == 0) {
    cert.verdict = f.degree() <= 1;
    if (!cert.verdict) cert.reason = "constant g interlaces only f of degree at most 1";
    return cert;
  }

  // Roots in descending order as indices into the merged list.
  auto expand = [&](bool of_f) {
    std::vector<std::size_t> idx;
    for (std::size_t k = cert.merged.size(); k-- > 0;) {
      int m = of_f ? cert.merged[k].mult_f : cert.merged[k].mult_g;
      idx.insert(idx.end(), static_cast<std::size_t>(m), k);
    }
    return idx;
  };
  std::vector<std::size_t> r = expand(true);
  std::vector<std::size_t> s = expand(false);
  auto at = [&](std::size_t k) { return interval_text(cert.merged[k].where); };

  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] > r[i]) {
      cert.reason = "s_" + std::to_string(i + 1) + " at " + at(s[i]) + " exceeds r_" + std::to_string(i + 1) +
                    " at " + at(r[i]);
      return cert;
    }
    if (i + 1 < r.size() && r[i + 1] > s[i]) {
      cert.reason = "r_" + std::to_string(i + 2) + " at " + at(r[i + 1]) + " exceeds s_" +
                    std::to_string(i + 1) + " at " + at(s[i]);
      return cert;
    }
  }
  cert.verdict = true;
  return cert;
}

SturmSequenceResult generalized_sturm_check(std::span<const UniPoly> seq) {
  if (seq.empty()) throw UsageError("generalized_sturm_check: empty sequence");
  auto fail = [](std::size_t j, std::string why) {
    return SturmSequenceResult{false, j, std::move(why)};
  };
  for (std::size_t j = 0; j < seq.size(); ++j) {
    const UniPoly& p = seq[j];
    if (p.is_zero()) return fail(j, "entry is zero");
    if (p.degree() != static_cast<int>(j)) {
      return fail(j, "degree " + std::to_string(p.degree()) + ", expected " + std::to_string(j));
    }
    if (sgn(p.leading()) <= 0) return fail(j, "nonpositive leading coefficient");
    if (!is_real_rooted(p)) return fail(j, p.to_string() + " is not real-rooted");
    if (j > 0) {
      InterlacingCertificate cert = interlaces(seq[j - 1], p);
      if (!cert.verdict) {
        return fail(j, "entry " + std::to_string(j - 1) + " does not interlace entry " + std::to_string(j) +
                           ": " + cert.reason);
      }
    }
  }
  return {true, std::nullopt, {}};
}

std::vector<UniPoly> theorem_z_slices(const BiPoly& f, BiVar var) { return f.slices(var); }

TheoremZReport verify_theorem_z(const BiPoly& f, BiVar var) {
  TheoremZReport rep;
  rep.var = var;
  rep.slices = theorem_z_slices(f, var);
  if (rep.slices.empty()) {
    rep.applicable = false;
    rep.applicability_note = "outside checked form: zero polynomial";
    return rep;
  }
  bool all_real = true;
  for (std::size_t j = 0; j < rep.slices.size(); ++j) {
    const UniPoly& s = rep.slices[j];
    if (s.is_zero() || sgn(s.leading()) <= 0) {
      rep.slice_real_rooted.push_back(false);
      all_real = false;
      if (rep.applicable) {
        rep.applicable = false;
        rep.applicability_note = "outside checked form: slice " + std::to_string(j) +
                                 (s.is_zero() ? " vanishes" : " has a nonpositive leading coefficient");
      }
      continue;
    }
    bool rr = is_real_rooted(s);
    rep.slice_real_rooted.push_back(rr);
    all_real = all_real && rr;
  }
  if (!rep.applicable) {
    rep.chain = {false, std::nullopt, rep.applicability_note};
    return rep;
  }
  std::vector<UniPoly> reversed(rep.slices.rbegin(), rep.slices.rend());
  rep.chain = generalized_sturm_check(reversed);
  rep.verdict = all_real && rep.chain.verdict;
  return rep;
}

GaussRat pair_form_value(const UniPoly& fk, const UniPoly& fk1, const GaussRat& x, const GaussRat& y) {
  return fk1.evaluate(x) + y * fk.evaluate(x);
}

GaussRat hb_form_value(const UniPoly& fk, const UniPoly& fk1, const GaussRat& z) {
  return fk1.evaluate(z) + GaussRat(0, 1) * fk.evaluate(z);
}

HbProbeReport hb_pair_probe(const UniPoly& fk, const UniPoly& fk1, std::size_t samples, std::uint64_t seed) {
  require_nonzero(fk, "hb_pair_probe");
  require_nonzero(fk1, "hb_pair_probe");
  HbProbeReport rep;
  rep.samples = samples;
  UpperHalfPlaneSampler sampler(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    GaussRat x = sampler.next();
    GaussRat y = sampler.next();
    GaussRat z = sampler.next();
    if (!rep.pair_zero_found && pair_form_value(fk, fk1, x, y).is_zero()) {
      rep.pair_zero_found = true;
      rep.pair_witness = {{"x", x}, {"y", y}};
    }
    if (!rep.hb_zero_found && hb_form_value(fk, fk1, z).is_zero()) {
      rep.hb_zero_found = true;
      rep.hb_witness = z;
    }
  }
  return rep;
}

nlohmann::json to_json(const SturmChain& chain) {
  nlohmann::json entries = nlohmann::json::array();
  for (const UniPoly& p : chain.entries()) entries.push_back(p.to_string());
  return {{"chain", entries},
          {"real_roots", chain.count(Bound::neg_inf(), Bound::pos_inf())},
          {"variations_neg_inf", chain.variations(Bound::neg_inf())},
          {"variations_pos_inf", chain.variations(Bound::pos_inf())}};
}

nlohmann::json to_json(const IsolatingInterval& interval) {
  return {{"lo", to_string(interval.lo)}, {"hi", to_string(interval.hi)}, {"multiplicity", interval.multiplicity}};
}

nlohmann::json to_json(const InterlacingCertificate& cert) {
  auto list = [](const std::vector<IsolatingInterval>& ivs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& iv : ivs) a.push_back(to_json(iv));
    return a;
  };
  nlohmann::json merged = nlohmann::json::array();
  for (const MergedRoot& m : cert.merged) {
    merged.push_back({{"lo", to_string(m.where.lo)},
                      {"hi", to_string(m.where.hi)},
                      {"mult_f", m.mult_f},
                      {"mult_g", m.mult_g}});
  }
  nlohmann::json j = {{"verdict", cert.verdict},
                      {"common_factor", cert.common_factor.to_string()},
                      {"f_roots", list(cert.f_roots)},
                      {"g_roots", list(cert.g_roots)},
                      {"merged", merged}};
  if (!cert.reason.empty()) j["reason"] = cert.reason;
  return j;
}

nlohmann::json to_json(const SturmSequenceResult& result) {
  nlohmann::json j = {{"verdict", result.verdict}};
  if (result.failed_index) j["failed_index"] = *result.failed_index;
  if (!result.reason.empty()) j["reason"] = result.reason;
  return j;
}

nlohmann::json to_json(const TheoremZReport& report) {
  nlohmann::json slices = nlohmann::json::array();
  for (std::size_t j = 0; j < report.slices.size(); ++j) {
    slices.push_back({{"index", j},
                      {"poly", report.slices[j].to_string()},
                      {"real_rooted", static_cast<bool>(report.slice_real_rooted[j])}});
  }
  nlohmann::json j = {{"variable", report.var == BiVar::kT ? "t" : "q"},
                      {"slices", slices},
                      {"applicable", report.applicable},
                      {"chain", to_json(report.chain)},
                      {"verdict", report.verdict}};
  if (!report.applicability_note.empty()) j["note"] = report.applicability_note;
  return j;
}

nlohmann::json to_json(const HbProbeReport& report) {
  nlohmann::json j = {{"samples", report.samples},
                      {"pair_zero_found", report.pair_zero_found},
                      {"hb_zero_found", report.hb_zero_found}};
  if (report.pair_zero_found) {
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [name, v] : report.pair_witness) w[name] = gauss_json(v);
    j["pair_witness"] = w;
  }
  if (report.hb_witness) j["hb_witness"] = gauss_json(*report.hb_witness);
  return j;
}

}  // namespace segeuler
