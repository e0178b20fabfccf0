#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "segeuler/errors.hpp"
#include "segeuler/eulerbase.hpp"
#include "segeuler/rootcert.hpp"
#include "segeuler/verify.hpp"

using namespace segeuler;

namespace {

UniPoly from_roots(const std::vector<Rat>& roots, const Rat& lead = 1) {
  return UniPoly(oracle::poly_from_roots(roots)) * lead;
}

bool contains(const IsolatingInterval& iv, const Rat& r) { return iv.lo <= r && r <= iv.hi; }

void check_isolation(const std::vector<IsolatingInterval>& ivs, const std::vector<Rat>& distinct,
                     const std::vector<int>& mult) {
  REQUIRE(ivs.size() == distinct.size());
  for (std::size_t k = 0; k < ivs.size(); ++k) {
    CHECK(ivs[k].lo <= ivs[k].hi);
    CHECK(contains(ivs[k], distinct[k]));
    CHECK(ivs[k].multiplicity == mult[k]);
    if (k + 1 < ivs.size()) CHECK(ivs[k].hi < ivs[k + 1].lo);
  }
}

}  // namespace

TEST_CASE("sturm chains") {
  SturmChain c1 = sturm_chain(UniPoly{-1, 0, 1});
  REQUIRE(c1.entries().size() == 3);
  CHECK(c1.entries()[0] == UniPoly{-1, 0, 1});
  CHECK(c1.entries()[1] == UniPoly{0, 1});
  CHECK(c1.entries()[2] == UniPoly{1});

  SturmChain c2 = sturm_chain(UniPoly{1, 0, 1});
  REQUIRE(c2.entries().size() == 3);
  CHECK(c2.entries()[2] == UniPoly{-1});

  SturmChain c3 = sturm_chain(UniPoly{13, 10, 1});
  REQUIRE(c3.entries().size() == 3);
  CHECK(c3.entries()[2].degree() == 0);
  CHECK(sgn(c3.entries()[2].leading()) > 0);

  for (std::size_t k = 0; k + 1 < c3.entries().size(); ++k) {
    CHECK(c3.entries()[k].degree() > c3.entries()[k + 1].degree());
  }
  CHECK_THROWS_AS(sturm_chain(UniPoly()), UndefinedInputError);
  // squarefree reduction happens first
  CHECK(sturm_chain(UniPoly{1, 2, 1}).entries().front() == UniPoly{1, 1});
}

TEST_CASE("counting real roots") {
  CHECK(count_real_roots(UniPoly{1, 0, 1}) == 0);
  CHECK(count_real_roots(UniPoly{-2, 0, 1}) == 2);
  CHECK(count_real_roots(UniPoly{13, 10, 1}) == 2);
  CHECK(count_real_roots(UniPoly{5}) == 0);
  // (lo, hi] semantics
  UniPoly f{-1, 0, 1};
  CHECK(count_real_roots(f, Bound::at(-1), Bound::at(1)) == 1);
  CHECK(count_real_roots(f, Bound::at(-2), Bound::at(1)) == 2);
  CHECK(count_real_roots(f, Bound::at(-1), Bound::at(make_rat(1, 2))) == 0);
  CHECK(count_real_roots(f, Bound::at(1), Bound::at(-1)) == 0);
  CHECK(count_real_roots(f, Bound::neg_inf(), Bound::at(0)) == 1);
  CHECK_THROWS_AS(count_real_roots(UniPoly()), UndefinedInputError);
}

TEST_CASE("real-rootedness") {
  CHECK(is_real_rooted(UniPoly{1, 2, 1}));
  CHECK_FALSE(is_real_rooted(UniPoly{1, 0, 1}));
  CHECK(is_real_rooted(UniPoly{13, 10, 1}));
  CHECK(is_real_rooted(UniPoly{7}));
  CHECK_THROWS_AS(is_real_rooted(UniPoly()), UndefinedInputError);
  for (int n = 1; n <= 20; ++n) CHECK(is_real_rooted(closed_P(n)));
}

TEST_CASE("real-rootedness is invariant under shifts and positive scaling") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> small(-20, 20);
  std::uniform_int_distribution<int> pos(1, 9);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rat> roots = oracle::distinct_rationals(rng, 4);
    UniPoly f = from_roots(roots);
    if (trial % 2 == 1) f = f * UniPoly{pos(rng), 0, 1};  // adds a non-real pair
    bool expected = trial % 2 == 0;
    Rat c = make_rat(small(rng), pos(rng));
    Rat lambda = make_rat(pos(rng), pos(rng));
    CHECK(is_real_rooted(f) == expected);
    CHECK(is_real_rooted(f.shift(c)) == expected);
    CHECK(is_real_rooted(f.scale_argument(lambda)) == expected);
  }
}

TEST_CASE("root isolation") {
  std::vector<IsolatingInterval> r2 = isolate_roots(UniPoly{-2, 0, 1});
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].hi < 0);
  CHECK(r2[1].lo >= 0);  // intervals are half-open (lo, hi]
  IsolatingInterval neg = refine_root(UniPoly{-2, 0, 1}, r2[0], make_rat(1, 4));
  CHECK(neg.hi - neg.lo <= make_rat(1, 4));
  CHECK(neg.lo * neg.lo > 2);
  CHECK(neg.hi * neg.hi < 2);

  std::vector<IsolatingInterval> double_root = isolate_roots(UniPoly{1, 2, 1});
  REQUIRE(double_root.size() == 1);
  CHECK(contains(double_root[0], -1));
  CHECK(double_root[0].multiplicity == 2);

  std::vector<IsolatingInterval> k30 = isolate_roots(UniPoly{1, 4, 1});
  REQUIRE(k30.size() == 2);
  // -2 - sqrt 3 < -3.7 and -2 + sqrt 3 > -0.27
  IsolatingInterval a = refine_root(UniPoly{1, 4, 1}, k30[0], make_rat(1, 100));
  IsolatingInterval b = refine_root(UniPoly{1, 4, 1}, k30[1], make_rat(1, 100));
  CHECK(a.hi < make_rat(-37, 10));
  CHECK(a.lo > make_rat(-38, 10));
  CHECK(b.lo > make_rat(-28, 100));
  CHECK(b.hi < make_rat(-26, 100));

  CHECK(isolate_roots(UniPoly{3}).empty());
  CHECK_THROWS_AS(isolate_roots(UniPoly{1, 0, 1}), DomainError);
  try {
    isolate_roots(UniPoly{1, 0, 1});
  } catch (const DomainError& e) {
    CHECK(e.code() == DomainCode::kNotRealRooted);
    CHECK(std::string(e.what()).find("Sturm count 0") != std::string::npos);
  }
}

TEST_CASE("isolation budget is reported, not looped") {
  // roots 0 and 2^-80 are closer than the default budget resolves
  UniPoly f = from_roots({0, make_rat(1, Int(1) << 80)});
  CHECK_THROWS_AS(isolate_roots(f, {8}), DomainError);
  std::vector<IsolatingInterval> ok = isolate_roots(f, {200});
  CHECK(ok.size() == 2);
}

TEST_CASE("constructed-root oracle: counting and isolation") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> deg(1, 8);
  std::uniform_int_distribution<int> lead(1, 7);
  std::uniform_int_distribution<int> extra(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = deg(rng);
    std::vector<Rat> roots = oracle::distinct_rationals(rng, d);
    std::vector<int> mult(static_cast<std::size_t>(d), 1);
    std::vector<Rat> with_mult;
    for (int k = 0; k < d; ++k) {
      if (trial % 3 == 0) mult[static_cast<std::size_t>(k)] += extra(rng);
      for (int m = 0; m < mult[static_cast<std::size_t>(k)]; ++m) with_mult.push_back(roots[static_cast<std::size_t>(k)]);
    }
    Rat c = trial % 2 == 0 ? Rat(lead(rng)) : Rat(-lead(rng));
    UniPoly f = from_roots(with_mult, c);
    CHECK(count_real_roots(f) == d);
    CHECK(count_real_roots(f * UniPoly{2, 0, 1}) == d);
    check_isolation(isolate_roots(f), roots, mult);
    // one root per bracket between consecutive midpoints
    for (int k = 0; k + 1 < d; ++k) {
      Rat mid = (roots[static_cast<std::size_t>(k)] + roots[static_cast<std::size_t>(k) + 1]) / 2;
      CHECK(count_real_roots(f, Bound::neg_inf(), Bound::at(mid)) == k + 1);
    }
  }
}

TEST_CASE("interlacing examples") {
  CHECK(interlaces(UniPoly{1, 1}, UniPoly{0, 2, 1}).verdict);
  CHECK(interlaces(UniPoly{2}, UniPoly{1, 1}).verdict);
  InterlacingCertificate k3 = interlaces(UniPoly{6, 6}, UniPoly{1, 4, 1});
  CHECK(k3.verdict);
  CHECK(k3.common_factor == UniPoly{1});
  CHECK(k3.merged.size() == 3);
  CHECK(k3.f_roots.size() == 2);
  CHECK(k3.g_roots.size() == 1);
  // constants interlace only polynomials of degree <= 1
  CHECK(interlaces(UniPoly{2}, UniPoly{3}).verdict);
  CHECK_THROWS_AS(interlaces(UniPoly{2}, UniPoly{-1, 0, 1}), DomainError);
  // shared roots are allowed (weak interlacing)
  InterlacingCertificate shared = interlaces(UniPoly{0, 1}, UniPoly{0, -1, 1});
  CHECK(shared.verdict);
  CHECK(shared.common_factor == UniPoly{0, 1});
  CHECK(interlaces(from_roots({1, 1}), from_roots({1, 1, 1})).verdict);
  CHECK_FALSE(interlaces(from_roots({2}), from_roots({0, 1})).verdict);
  CHECK_FALSE(interlaces(from_roots({1, 3}), from_roots({0, 2})).verdict);
  CHECK(interlaces(from_roots({0, 2}), from_roots({1, 3})).verdict);
}

TEST_CASE("interlacing errors") {
  auto code_of = [](const UniPoly& g, const UniPoly& f) {
    try {
      interlaces(g, f);
    } catch (const DomainError& e) {
      return e.code();
    }
    return DomainCode::kUnresolved;
  };
  CHECK(code_of(UniPoly{-1, -1}, UniPoly{0, 2, 1}) == DomainCode::kNonPositiveLeading);
  CHECK(code_of(UniPoly{1}, UniPoly{0, 0, 1}) == DomainCode::kDegreeGap);
  CHECK(code_of(UniPoly{0, 0, 1}, UniPoly{0, 1}) == DomainCode::kDegreeGap);
  CHECK(code_of(UniPoly{0, 1}, UniPoly{1, 0, 1}) == DomainCode::kNotRealRooted);
  CHECK_THROWS_AS(interlaces(UniPoly(), UniPoly{1}), UndefinedInputError);
}

TEST_CASE("constructed-root oracle: interlacing") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> deg(2, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = deg(rng);
    std::vector<Rat> a = oracle::distinct_rationals(rng, d);
    const bool same_degree = trial % 2 == 0;
    std::vector<Rat> b;
    std::uniform_int_distribution<int> pick(0, 4);
    auto between = [&](const Rat& lo, const Rat& hi) -> Rat {
      switch (pick(rng)) {
        case 0:
          return lo;
        case 1:
          return hi;
        default:
          return lo + (hi - lo) * make_rat(pick(rng) + 1, 6);
      }
    };
    if (same_degree) b.push_back(a[0] - make_rat(pick(rng), 3));
    for (int k = 0; k + 1 < d; ++k) b.push_back(between(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(k) + 1]));
    UniPoly f = from_roots(a, make_rat(pick(rng) + 1, 2));
    UniPoly g = from_roots(b, make_rat(pick(rng) + 1, 3));
    CHECK(interlaces(g, f).verdict);

    // move one root of g outside its window
    std::vector<Rat> moved = b;
    std::uniform_int_distribution<std::size_t> which(0, b.size() - 1);
    std::size_t k = which(rng);
    moved[k] = trial % 4 < 2 ? Rat(a.back() + 1 + pick(rng)) : Rat(a.front() - 1 - pick(rng));
    // with equal degrees a root below every root of f can still interlace
    if (same_degree && moved[k] < a.front()) moved[k] = a.back() + 1;
    CHECK_FALSE(interlaces(from_roots(moved), f).verdict);
  }
}

TEST_CASE("generalized Sturm sequences") {
  std::vector<UniPoly> k2{UniPoly{2}, UniPoly{1, 1}};
  CHECK(generalized_sturm_check(k2).verdict);
  std::vector<UniPoly> k3{UniPoly{6}, UniPoly{6, 6}, UniPoly{1, 4, 1}};
  CHECK(generalized_sturm_check(k3).verdict);
  std::vector<UniPoly> bad{UniPoly{1}, UniPoly{0, 1}, UniPoly{1, 0, 1}};
  SturmSequenceResult r = generalized_sturm_check(bad);
  CHECK_FALSE(r.verdict);
  CHECK(r.failed_index == 2);
  CHECK(r.reason.find("real-rooted") != std::string::npos);
  std::vector<UniPoly> gap{UniPoly{1}, UniPoly{0, 0, 1}};
  CHECK(generalized_sturm_check(gap).failed_index == 1);
  std::vector<UniPoly> neg{UniPoly{-1}};
  CHECK(generalized_sturm_check(neg).failed_index == 0);
  std::vector<UniPoly> not_interlacing{UniPoly{1}, UniPoly{-3, 1}, from_roots({0, 1})};
  CHECK(generalized_sturm_check(not_interlacing).failed_index == 2);
  CHECK_THROWS_AS(generalized_sturm_check(std::vector<UniPoly>{}), UsageError);
}

TEST_CASE("coefficient slices") {
  BiPoly a3 = closed_alpha(3);
  CHECK(theorem_z_slices(a3, BiVar::kQ) == std::vector<UniPoly>{UniPoly{1, 4, 1}, UniPoly{6, 6}, UniPoly{6}});
  CHECK(theorem_z_slices(a3, BiVar::kT) == std::vector<UniPoly>{UniPoly{1, 6, 6}, UniPoly{4, 6}, UniPoly{1}});
  CHECK(theorem_z_slices(BiPoly::constant(3), BiVar::kQ).size() == 1);
}

TEST_CASE("slice sequence verification") {
  for (BiVar v : {BiVar::kQ, BiVar::kT}) {
    TheoremZReport r = verify_theorem_z(closed_alpha(3), v);
    CHECK(r.applicable);
    CHECK(r.verdict);
    CHECK(r.chain.verdict);
    for (bool b : r.slice_real_rooted) CHECK(b);
  }
  for (int n = 1; n <= 12; ++n) {
    CHECK(verify_theorem_z(closed_alpha(n), BiVar::kQ).verdict);
    CHECK(verify_theorem_z(closed_alpha(n), BiVar::kT).verdict);
  }
  // 1 + t^2 q: slice degrees (0, 2) fail the degree check
  BiPoly f = BiPoly::constant(1) + BiPoly::monomial(1, 2, 1);
  TheoremZReport r = verify_theorem_z(f, BiVar::kQ);
  CHECK(r.applicable);
  CHECK_FALSE(r.verdict);
  CHECK(r.chain.failed_index == 0);
  // 1 + t q reverses to (t, 1), whose degrees do not ascend
  TheoremZReport tq = verify_theorem_z(BiPoly::constant(1) + BiPoly::monomial(1, 1, 1), BiVar::kQ);
  CHECK_FALSE(tq.verdict);
  // negative leading coefficient or vanishing slice: outside the checked form
  TheoremZReport out = verify_theorem_z(BiPoly::constant(1) + BiPoly::monomial(-1, 1, 1), BiVar::kQ);
  CHECK_FALSE(out.applicable);
  CHECK(out.applicability_note.find("outside checked form") != std::string::npos);
  TheoremZReport hole = verify_theorem_z(BiPoly::constant(1) + BiPoly::monomial(1, 0, 2), BiVar::kQ);
  CHECK_FALSE(hole.applicable);
}

TEST_CASE("hermite-biehler probes") {
  HbProbeReport r = hb_pair_probe(UniPoly{2}, UniPoly{1, 1}, 1000, kDefaultSeed);
  CHECK(r.samples == 1000);
  CHECK_FALSE(r.pair_zero_found);
  CHECK_FALSE(r.hb_zero_found);
  CHECK_FALSE(hb_pair_probe(UniPoly{0, 1}, UniPoly{-1, 0, 1}, 500, 3).pair_zero_found);
  // for the interlacing pair (2, 1 + x) the zeros of both forms lie outside
  // the upper half-plane
  CHECK(hb_form_value(UniPoly{2}, UniPoly{1, 1}, GaussRat(-1, -2)).is_zero());
  CHECK(pair_form_value(UniPoly{2}, UniPoly{1, 1}, GaussRat(-1, 2), GaussRat(0, -1)).is_zero());
  CHECK(hb_form_value(UniPoly{1}, UniPoly{1, 0, 1}, GaussRat(0, 1)) == GaussRat(0, 1));
  // x = 2i makes 1 + x^2 = -3, so the pair form vanishes only at the real y = 3
  CHECK(pair_form_value(UniPoly{1}, UniPoly{1, 0, 1}, GaussRat(0, 2), GaussRat(3)).is_zero());
}

TEST_CASE("certificate serialization") {
  nlohmann::json j = to_json(interlaces(UniPoly{6, 6}, UniPoly{1, 4, 1}));
  CHECK(j["verdict"] == true);
  CHECK(j["merged"].size() == 3);
  CHECK(j["f_roots"][0]["lo"].is_string());
  nlohmann::json c = to_json(sturm_chain(UniPoly{13, 10, 1}));
  CHECK(c["real_roots"] == 2);
  nlohmann::json t = to_json(verify_theorem_z(closed_alpha(3), BiVar::kQ));
  CHECK(t["verdict"] == true);
  CHECK(t["slices"].size() == 3);
  CHECK(to_json(hb_pair_probe(UniPoly{2}, UniPoly{1, 1}, 10, 1))["samples"] == 10);
}
