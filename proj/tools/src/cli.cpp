#include "segeuler_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "segeuler/count_triangle.hpp"
#include "segeuler/errors.hpp"
#include "segeuler/eulerbase.hpp"
#include "segeuler/genmultivar.hpp"
#include "segeuler/report_cache.hpp"
#include "segeuler/rootcert.hpp"
#include "segeuler/segperm.hpp"
#include "segeuler/verify.hpp"

namespace segeuler::cli {

namespace {

/// Closed-form tables are offered up to this n.
constexpr int kTableLimit = 20;
/// Full enumeration dumps are offered up to this n.
constexpr int kDumpLimit = 6;

struct Config {
  int threads = 1;
  std::string seed_text;
  std::uint64_t seed = kDefaultSeed;
  std::string cache_dir;
  bool force = false;
  std::string format = "markdown";
};

std::uint64_t parse_seed(const std::string& text) {
  if (text.empty()) return kDefaultSeed;
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(text, &pos, 0);
    if (pos != text.size()) throw UsageError("bad seed '" + text + "'");
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("bad seed '" + text + "'");
  }
}

void print_triangle(const CountTriangle& tri, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << tri.to_json().dump(2) << '\n';
  } else if (format == "csv") {
    out << tri.to_csv();
  } else {
    out << tri.to_markdown();
  }
}

int cmd_table(const Config& cfg, const std::string& stat, int n, bool enumerate, std::ostream& out) {
  if (n < 1) throw RangeError("--n must be >= 1");
  std::optional<CountTriangle> tri;
  if (enumerate) {
    DesSegCounts counts = streaming_counts(n, {cfg.threads, kStreamingDefaultLimit});
    if (stat == "A") {
      std::vector<CountTriangle::Entry> entries;
      for (int k = 0; k < n; ++k) {
        entries.push_back({k, std::nullopt, Int(static_cast<unsigned long>(counts.at(k, 0)))});
      }
      tri.emplace(CountTriangle::Kind::kEulerianA, n, std::move(entries));
    } else if (stat == "T") {
      tri.emplace(CountTriangle::seg_t_from(n, counts.to_bipoly()));
    } else {
      tri.emplace(CountTriangle::seg_k_from(n, counts.to_bipoly()));
    }
  } else {
    if (n > kTableLimit) {
      throw ResourceError("closed-form tables are limited to n <= " + std::to_string(kTableLimit));
    }
    if (stat == "A") {
      tri.emplace(CountTriangle::eulerian(n));
    } else if (stat == "T") {
      tri.emplace(CountTriangle::seg_t(n));
    } else {
      tri.emplace(CountTriangle::seg_k(n));
    }
  }
  print_triangle(*tri, cfg.format, out);
  return kOk;
}

int cmd_enumerate(const Config& cfg, int n, std::ostream& out) {
  if (n < 1) throw RangeError("--n must be >= 1");
  if (n > kDumpLimit) throw ResourceError("enumeration dumps are limited to n <= " + std::to_string(kDumpLimit));
  SegmentedStream stream = enumerate_segmented(n);
  std::size_t total = 0;
  nlohmann::json rows = nlohmann::json::array();
  if (cfg.format == "csv") out << "sigma,des,seg,w\n";
  while (auto sigma = stream.next()) {
    ++total;
    const std::string text = sigma->to_string();
    const std::string mono = monomial_to_string(segmented_monomial(*sigma));
    if (cfg.format == "json") {
      rows.push_back({{"sigma", text}, {"des", des(*sigma)}, {"seg", seg(*sigma)}, {"w", mono}});
    } else if (cfg.format == "csv") {
      out << text << ',' << des(*sigma) << ',' << seg(*sigma) << ',' << mono << '\n';
    } else {
      out << text << " des=" << des(*sigma) << " seg=" << seg(*sigma) << " w'=" << mono << '\n';
    }
  }
  if (cfg.format == "json") {
    out << nlohmann::json{{"n", n}, {"objects", rows}, {"total", total}}.dump(2) << '\n';
  } else if (cfg.format != "csv") {
    out << "total " << total << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  std::string which = "all";
  std::optional<int> n_max;
  int n_max_p = 20;
  int n_max_kl = 12;
  int streaming_max = 8;
  int m_max = 3;
  int precision = 15;
  std::size_t samples = 10000;
};

int cmd_verify(const Config& cfg, const VerifyArgs& args, std::ostream& out) {
  std::unique_ptr<ReportCache> cache;
  if (!cfg.cache_dir.empty()) cache = std::make_unique<ReportCache>(cfg.cache_dir);
  VerifyOptions opt{cfg.threads, cfg.seed, cache.get(), cfg.force};
  auto nmax = [&](int fallback) { return args.n_max.value_or(fallback); };
  const bool all = args.which == "all";

  VerificationReport report{args.which, {}};
  if (all || args.which == "identity") report.append(check_operator_identity(nmax(6), opt));
  if (all || args.which == "closed") report.append(check_closed_forms(nmax(20), args.streaming_max, opt));
  if (all || args.which == "convolution") report.append(check_convolution(nmax(8), opt));
  if (all || args.which == "specializations") report.append(check_specializations(nmax(20), opt));
  if (all || args.which == "gf") report.append(check_gf_remark(nmax(4), args.m_max, args.precision, opt));
  if (all || args.which == "roots") report.append(check_real_rootedness(args.n_max_p, args.n_max_kl, opt));
  if (all || args.which == "conjecture") report.append(check_conjecture(nmax(12), opt));
  if (all || args.which == "probes") {
    ProbeLimits limits;
    limits.samples = args.samples;
    if (args.n_max) {
      limits.n_max_a = std::min(*args.n_max, limits.n_max_a);
      limits.n_max_alpha = std::min(*args.n_max, limits.n_max_alpha);
      limits.n_max_tq = *args.n_max;
    }
    report.append(check_stability_probes(limits, opt));
  }

  if (cfg.format == "json") {
    out << report.to_json().dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "check,n,verdict,millis\n";
    for (const CellResult& c : report.cells) {
      out << c.check << ',' << c.n << ',' << (c.verdict ? "true" : "false") << ',' << c.millis << '\n';
    }
  } else {
    out << "| check | n | verdict |\n|---|---|---|\n";
    for (const CellResult& c : report.cells) {
      out << "| " << c.check << " | " << c.n << " | " << (c.verdict ? "true" : "false") << " |\n";
    }
  }
  if (const CellResult* bad = report.first_failure()) {
    out << "counterexample: " << to_json(*bad).dump() << '\n';
    return kCounterexample;
  }
  if (cfg.format == "markdown") out << "all " << report.cells.size() << " cells verified\n";
  return kOk;
}

struct RootsArgs {
  std::string poly;
  std::string g;
  std::string f;
  std::string action = "count";
  std::string lo;
  std::string hi;
  std::string width;
};

Bound parse_bound(const std::string& text, Bound fallback) {
  if (text.empty()) return fallback;
  return Bound::at(parse_rat(text));
}

int cmd_roots(const RootsArgs& args, std::ostream& out) {
  nlohmann::json result;
  if (args.action == "interlace") {
    if (args.g.empty() || args.f.empty()) throw UsageError("interlace needs --g and --f");
    UniPoly g = UniPoly::parse(args.g);
    UniPoly f = UniPoly::parse(args.f);
    InterlacingCertificate cert = interlaces(g, f);
    result = {{"g", g.to_string()}, {"f", f.to_string()}, {"certificate", to_json(cert)}};
    out << result.dump(2) << '\n';
    return kOk;
  }
  if (args.poly.empty()) throw UsageError(args.action + " needs --poly");
  UniPoly p = UniPoly::parse(args.poly);
  if (args.action == "count") {
    SturmChain chain = sturm_chain(p);
    Bound lo = parse_bound(args.lo, Bound::neg_inf());
    Bound hi = parse_bound(args.hi, Bound::pos_inf());
    result = {{"poly", p.to_string()},
              {"lo", args.lo.empty() ? "-inf" : args.lo},
              {"hi", args.hi.empty() ? "+inf" : args.hi},
              {"count", chain.count(lo, hi)},
              {"sturm", to_json(chain)}};
  } else if (args.action == "isolate") {
    std::vector<IsolatingInterval> roots = isolate_roots(p);
    if (!args.width.empty()) {
      Rat width = parse_rat(args.width);
      for (IsolatingInterval& iv : roots) {
        int mult = iv.multiplicity;
        iv = refine_root(p, iv, width);
        iv.multiplicity = mult;
      }
    }
    nlohmann::json list = nlohmann::json::array();
    for (const IsolatingInterval& iv : roots) list.push_back(to_json(iv));
    result = {{"poly", p.to_string()}, {"roots", list}};
  } else {
    throw UsageError("unknown action '" + args.action + "'");
  }
  out << result.dump(2) << '\n';
  return kOk;
}

int cmd_bench(const Config& cfg, int n, std::ostream& out) {
  const StreamingOptions opt{cfg.threads, kStreamingDefaultLimit};
  const auto start = std::chrono::steady_clock::now();
  DesSegCounts counts = streaming_counts(n, opt);
  const auto stop = std::chrono::steady_clock::now();
  const double seconds = std::chrono::duration<double>(stop - start).count();
  const bool matches = counts.to_bipoly() == closed_alpha(n);
  const double rate = seconds > 0 ? static_cast<double>(counts.total()) / seconds : 0.0;
  if (cfg.format == "json") {
    out << nlohmann::json{{"n", n},
                          {"threads", cfg.threads},
                          {"objects", counts.total()},
                          {"seconds", seconds},
                          {"objects_per_second", rate},
                          {"matches_closed_form", matches}}
               .dump(2)
        << '\n';
  } else {
    out << "n=" << n << " threads=" << cfg.threads << " objects=" << counts.total() << std::fixed
        << std::setprecision(3) << " seconds=" << seconds << std::setprecision(0) << " objects_per_second=" << rate
        << " matches_closed_form=" << (matches ? "true" : "false") << '\n';
  }
  return matches ? kOk : kCounterexample;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Segmented permutations and multivariate Eulerian polynomials"};
  app.name("segeuler");
  app.require_subcommand(1);

  Config cfg;
  if (const char* env = std::getenv("SEGEULER_CACHE_DIR")) cfg.cache_dir = env;
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed_text, "Probe seed (decimal or 0x hex); default 0xC0FFEE");
  app.add_option("--cache-dir", cfg.cache_dir, "Verification cache directory (env SEGEULER_CACHE_DIR)");
  app.add_flag("--force", cfg.force, "Recompute cached verification cells");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "markdown"}));

  std::string stat;
  int n = 0;
  bool enumerate = false;
  auto* table = app.add_subcommand("table", "Print A(n,k), T(n,k) or K(n,i,j)");
  table->add_option("--stat", stat)->required()->check(CLI::IsMember({"T", "K", "A"}));
  table->add_option("--n", n)->required();
  table->add_flag("--enumerate", enumerate, "Count by enumeration instead of the closed form");

  int enum_n = 0;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List segmented permutations of [n]");
  enumerate_cmd->add_option("--n", enum_n)->required();

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--which", vargs.which)
      ->check(CLI::IsMember(
          {"identity", "closed", "convolution", "specializations", "gf", "roots", "conjecture", "probes", "all"}));
  verify->add_option("--n-max", vargs.n_max);
  verify->add_option("--n-max-p", vargs.n_max_p);
  verify->add_option("--n-max-kl", vargs.n_max_kl);
  verify->add_option("--streaming-max", vargs.streaming_max, "Largest n compared against enumeration");
  verify->add_option("--m-max", vargs.m_max);
  verify->add_option("--precision", vargs.precision, "Tail bound below 10^-precision");
  verify->add_option("--samples", vargs.samples);

  RootsArgs rargs;
  auto* roots = app.add_subcommand("roots", "Sturm counts, root isolation and interlacing certificates");
  roots->add_option("--poly", rargs.poly, "Coefficients, constant term first, e.g. 13,10,1");
  roots->add_option("--g", rargs.g);
  roots->add_option("--f", rargs.f);
  roots->add_option("--action", rargs.action)->check(CLI::IsMember({"count", "isolate", "interlace"}));
  roots->add_option("--lo", rargs.lo, "Lower bound for count (exclusive)");
  roots->add_option("--hi", rargs.hi, "Upper bound for count (inclusive)");
  roots->add_option("--width", rargs.width, "Refine isolating intervals to this width");

  int bench_n = 8;
  auto* bench = app.add_subcommand("bench", "Streaming enumeration throughput");
  bench->add_option("--n", bench_n);

  for (CLI::App* sub : {table, enumerate_cmd, verify, roots, bench}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.size() > 0 ? args.begin() + 1 : args.begin(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "segeuler: " << e.what() << '\n';
    return kUsage;
  }

  try {
    cfg.seed = parse_seed(cfg.seed_text);
    if (*table) return cmd_table(cfg, stat, n, enumerate, out);
    if (*enumerate_cmd) return cmd_enumerate(cfg, enum_n, out);
    if (*verify) return cmd_verify(cfg, vargs, out);
    if (*roots) return cmd_roots(rargs, out);
    if (*bench) return cmd_bench(cfg, bench_n, out);
  } catch (const UsageError& e) {
    err << "segeuler: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "segeuler: " << e.what() << '\n';
    return kUsage;
  } catch (const RangeError& e) {
    err << "segeuler: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "segeuler: domain error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kCounterexample;
  } catch (const UndefinedInputError& e) {
    err << "segeuler: " << e.what() << '\n';
    return kCounterexample;
  } catch (const std::exception& e) {
    err << "segeuler: " << e.what() << '\n';
    return kResource;
  }
  return kUsage;
}

}  // namespace segeuler::cli
