#include <doctest.h>

#include "oracles.hpp"
#include "segeuler/count_triangle.hpp"
#include "segeuler/errors.hpp"
#include "segeuler/eulerbase.hpp"

using namespace segeuler;

TEST_CASE("binomials and factorials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == Int("2432902008176640000"));
}

TEST_CASE("eulerian numbers") {
  CHECK(eulerian_number(1, 0) == 1);
  CHECK(eulerian_number(3, 1) == 4);
  CHECK(eulerian_row(4) == std::vector<Int>{1, 11, 11, 1});
  CHECK(eulerian_number(4, 4) == 0);
  CHECK(eulerian_number(4, -1) == 0);
  CHECK_THROWS_AS(eulerian_row(0), RangeError);
  for (int n = 1; n <= 8; ++n) CHECK(eulerian_row(n) == oracle::eulerian_row(n));
  for (int n = 1; n <= 20; ++n) {
    std::vector<Int> row = eulerian_row(n);
    Int sum = 0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      sum += row[k];
      CHECK(row[k] == row[row.size() - 1 - k]);
    }
    CHECK(sum == oracle::factorial(n));
  }
}

TEST_CASE("eulerian polynomials") {
  CHECK(eulerian_poly(1) == UniPoly{1});
  CHECK(eulerian_poly(2) == UniPoly{1, 1});
  CHECK(eulerian_poly(3) == UniPoly{1, 4, 1});
}

TEST_CASE("stirling numbers and ordered bell polynomials") {
  for (int n = 1; n <= 8; ++n) CHECK(stirling2(n, 1) == 1);
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(0, 0) == 1);
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(stirling2(n, k) == oracle::stirling2(n, k));
  }
  CHECK(ordered_bell_poly(1) == UniPoly{1});
  CHECK(ordered_bell_poly(2) == UniPoly{1, 2});
  CHECK(ordered_bell_poly(3) == UniPoly{1, 6, 6});
}

TEST_CASE("closed forms") {
  CHECK(closed_alpha(1) == BiPoly::constant(1));
  CHECK(closed_alpha(2) == BiPoly::constant(1) + BiPoly::monomial(1, 1, 0) + BiPoly::monomial(2, 0, 1));
  CHECK(closed_P(1) == UniPoly{1});
  CHECK(closed_P(2) == UniPoly{3, 1});
  CHECK(closed_P(3) == UniPoly{13, 10, 1});
  for (int n = 1; n <= 7; ++n) {
    BiPoly a = closed_alpha(n);
    for (const auto& [ds, count] : oracle::des_seg_counts(n)) CHECK(a.coeff(ds.first, ds.second) == Rat(count));
    CHECK(a.total_degree() == n - 1);
  }
  for (int n = 1; n <= 20; ++n) {
    CHECK(closed_P(n).evaluate(Rat(1)) == Rat(oracle::factorial(n) * (Int(1) << (n - 1))));
  }
}

TEST_CASE("convolution formula") {
  for (int n = 1; n <= 10; ++n) CHECK(k_convolution(n, 0, 0) == 1);
  CHECK(k_convolution(2, 0, 1) == 2);
  CHECK(k_convolution(3, 1, 1) == 6);
  for (int n = 1; n <= 7; ++n) {
    auto counts = oracle::des_seg_counts(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        auto it = counts.find({i, j});
        CHECK(k_convolution(n, i, j) == (it == counts.end() ? Int(0) : it->second));
      }
    }
  }
}

TEST_CASE("generating-function bracket") {
  CHECK(gf_min_cutoff(1, 0) == 12);
  CHECK_THROWS_AS(gf_partial_sum(1, 0, 11), UsageError);
  // sum_{k>=1} k / 2^(k+1) = 1
  GfBracket b = gf_partial_sum(1, 0, 40);
  CHECK(b.partial < 1);
  CHECK(b.partial + b.tail_bound >= 1);
  // the dropped tail equals (K+2) / 2^(K+1) exactly for n = 1, m = 0
  Rat exact_tail = make_rat(42, Int(1) << 41);
  CHECK(b.tail_bound >= exact_tail);

  for (int n = 1; n <= 4; ++n) {
    std::vector<Rat> p = closed_P(n).coeffs();
    std::vector<Rat> series = oracle::divide_by_one_minus_t_power(p, n + 1, 3);
    for (int m = 0; m <= 3; ++m) {
      CHECK(gf_target(n, m) == series[static_cast<std::size_t>(m)]);
      Rat previous_tail = -1;
      for (int cutoff = gf_min_cutoff(n, m); cutoff <= gf_min_cutoff(n, m) + 80; cutoff += 20) {
        GfBracket br = gf_partial_sum(n, m, cutoff);
        CHECK(br.tail_bound > 0);
        if (previous_tail >= 0) CHECK(br.tail_bound < previous_tail);
        previous_tail = br.tail_bound;
        CHECK(br.partial <= gf_target(n, m));
        CHECK(gf_target(n, m) <= br.partial + br.tail_bound);
      }
    }
  }
  CHECK(gf_target(1, 0) == 1);
  CHECK(gf_target(2, 0) == 3);
}

TEST_CASE("count triangles") {
  CountTriangle t3 = CountTriangle::seg_t(3);
  CHECK(t3.entries().size() == 3);
  CHECK(t3.entries()[0].count == 13);
  CHECK(t3.entries()[1].count == 10);
  CHECK(t3.entries()[2].count == 1);
  CHECK(t3.total() == 24);
  CHECK(CountTriangle::eulerian(4).total() == 24);
  CHECK(CountTriangle::seg_k(4).total() == 24 * 8);
  CHECK(CountTriangle::seg_k(2).entries().size() == 3);
  for (int n = 1; n <= 20; ++n) {
    CHECK(CountTriangle::seg_t(n).total() == oracle::factorial(n) * (Int(1) << (n - 1)));
    CHECK(CountTriangle::seg_k(n).total() == oracle::factorial(n) * (Int(1) << (n - 1)));
  }
  CHECK(CountTriangle::seg_k_from(3, closed_alpha(3)) == CountTriangle::seg_k(3));
  CHECK(CountTriangle::seg_t_from(3, closed_alpha(3)) == CountTriangle::seg_t(3));
  CHECK_THROWS_AS(CountTriangle(CountTriangle::Kind::kSegT, 0, {}), RangeError);
}

TEST_CASE("count triangle serialization") {
  CountTriangle k2 = CountTriangle::seg_k(2);
  nlohmann::json j = k2.to_json();
  CHECK(j["kind"] == "K");
  CHECK(j["n"] == 2);
  CHECK(j["entries"][0]["count"].is_string());
  CHECK(CountTriangle::from_json(j) == k2);
  CHECK(CountTriangle::from_json(CountTriangle::seg_t(20).to_json()) == CountTriangle::seg_t(20));
  CHECK_FALSE(CountTriangle::seg_t(3).to_json()["entries"][0].contains("j"));
  CHECK(CountTriangle::seg_t(3).to_csv() == "k,count\n0,13\n1,10\n2,1\n");
  CHECK(k2.to_csv().rfind("i,j,count\n", 0) == 0);
  CHECK_THROWS_AS(CountTriangle::from_json(nlohmann::json{{"kind", "Z"}, {"n", 1}, {"entries", nlohmann::json::array()}}),
                  ParseError);
  CHECK_THROWS_AS(CountTriangle::from_json(nlohmann::json::parse(R"({"kind":"T","n":1,"entries":[{"i":0,"count":"x"}]})")),
                  ParseError);
  // counts above 64 bits survive the round trip as decimal strings
  CHECK(CountTriangle::seg_t(20).total() > Int("18446744073709551615"));
}
