#include <cmath>

#include "doctest.h"

#include "critpoints/hilbert.hpp"
#include "critpoints/series.hpp"

using namespace critpoints;

namespace {

PowerSeries poly(std::initializer_list<int> c) {
  std::vector<BigInt> v;
  for (int x : c) v.emplace_back(x);
  return PowerSeries(v);
}

}  // namespace

TEST_CASE("series arithmetic") {
  CHECK(divide_exact(poly({1, 0, -1}), poly({1, -1})) == poly({1, 1}));
  CHECK(poly({1, 1}) * poly({1, -1}) == poly({1, 0, -1}));
  const PowerSeries inv2 = series_divide(poly({1}), poly({1, -2, 1}), 6);
  for (int d = 0; d < 6; ++d) CHECK(inv2.coeff(d) == d + 1);
  CHECK_THROWS_AS(inv2.coeff(6), std::out_of_range);
  CHECK_THROWS_AS(divide_exact(poly({1, 1}), poly({1, -1})), InexactDivision);
  CHECK(PowerSeries::one_minus_power(2, 2) == poly({1, 0, -2, 0, 1}));
  CHECK(poly({1, 2, 3}).value_at_one() == 6);
  CHECK(poly({0, 0}).degree() == -1);
}

TEST_CASE("matrix A entries") {
  CHECK(matrix_A(5, 1).size() == 0);
  CHECK(det_series(matrix_A(5, 1)) == poly({1}));
  const SeriesMatrix a2 = matrix_A(7, 2);
  REQUIRE(a2.size() == 1);
  CHECK(a2.at(0, 0) == poly({1, 5}));
  CHECK(det_series(a2) == poly({1, 5}));
  const SeriesMatrix a3 = matrix_A(4, 3);
  CHECK(a3.at(0, 0) == poly({1, 4, 1}));
  CHECK(a3.at(0, 1) == poly({1, 2}));
  CHECK(a3.at(1, 0) == poly({1, 2}));
  CHECK(a3.at(1, 1) == poly({1, 1}));
  for (int p = 1; p <= 6; ++p) {
    CHECK(det_series(matrix_A(p + 4, p)).degree() == p * (p - 1) / 2);
  }
}

TEST_CASE("Bareiss and cofactor determinants agree") {
  // Sizes 6 and 7 straddle the switch; both must give the exact integer det at 1.
  for (int n = 8; n <= 12; ++n) {
    for (int p : {6, 7, 8}) {
      if (p > n) continue;
      const PowerSeries d = det_series(matrix_A(n, p));
      CHECK(d.value_at_one() == det_A_at_one(n, p));
      CHECK(d.value_at_one() == binomial(n - 1, p - 1));
    }
  }
}

TEST_CASE("closed forms on reference points") {
  CHECK(hs_unmixed(2, 1, 2, 10) == PowerSeries(poly({1, 1}).coeffs(), 10));
  const PowerSeries h942 = hs_unmixed(9, 4, 2, default_truncation(9, 4, 2));
  CHECK(h942.value_at_one() == 896);
  CHECK(h942.degree() == 7);
  const PowerSeries h643 = hs_unmixed(6, 4, 3, default_truncation(6, 4, 3));
  CHECK(h643.value_at_one() == 3240);
  CHECK(h643.degree() == 16);
  CHECK(dreg_formula(9, 4, 2) == 8);
  CHECK(dreg_formula(6, 4, 3) == 17);
  CHECK(dreg_formula(7, 2, 3) == 12);
  CHECK(deg_formula(9, 4, 2) == 896);
  CHECK(deg_formula(9, 1, 3) == 768);
  CHECK(deg_formula(15, 3, 2) == 728);
  CHECK(det_A_at_one(5, 1) == 1);
  CHECK(det_A_at_one(9, 4) == 56);
  CHECK(det_A_at_one(5, 2) == 4);
}

TEST_CASE("determinantal series") {
  CHECK(hs_determinantal(1, 4, 8) == PowerSeries(poly({1}).coeffs(), 8));
  CHECK(hs_determinantal(2, 2, 12) ==
        series_divide(poly({1, 0, -1}), PowerSeries::one_minus_power(1, 4), 12));
  const PowerSeries h23 = hs_determinantal(2, 3, 12);
  CHECK(h23 == series_divide(poly({1, 2}), PowerSeries::one_minus_power(1, 4), 12));
}

TEST_CASE("complexity estimates") {
  const ComplexityBound b = complexity_bound(9, 4, 2, 2.0);
  REQUIRE(b.fglm_exact);
  // n C(n-1,p-1)^3 D^(3p) (D-1)^(3(n-p)) = 9 * 56^3 * 2^12 * 1.
  CHECK(*b.fglm_exact == BigInt(9) * 56 * 56 * 56 * 4096);
  CHECK(*b.fglm_exact == BigInt("6473908224"));
  CHECK(b.log10_fglm == doctest::Approx(std::log10(6473908224.0)));
  const ComplexityBound b1 = complexity_bound(7, 1, 2, 2.0);
  REQUIRE(b1.grevlex_binomial);
  CHECK(*b1.grevlex_binomial == binomial(9, 2));
  // D = 2 first binomial is C(n+2p, 2p).
  const ComplexityBound b2 = complexity_bound(10, 3, 2, 2.5);
  CHECK(*b2.grevlex_binomial == binomial(16, 6));
  CHECK(b2.log10_grevlex == doctest::Approx(2.5 * std::log10(binomial(16, 6).convert_to<double>())));
  CHECK_THROWS_AS(complexity_bound(9, 4, 2, 1.5), std::invalid_argument);
  CHECK(complexity_ratio(10000, 4, 3) == doctest::Approx(1.99).epsilon(0.003));
}

TEST_CASE("formula self-consistency over the small grid") {
  for (int n = 1; n <= 12; ++n) {
    for (int p = 1; p <= n; ++p) {
      for (int D = 2; D <= 4; ++D) {
        CAPTURE(n);
        CAPTURE(p);
        CAPTURE(D);
        const PowerSeries hs = hs_unmixed(n, p, D, default_truncation(n, p, D));
        REQUIRE(hs.nonnegative());
        REQUIRE(hs.vanishes_beyond_degree());
        REQUIRE(hs.value_at_one() == deg_formula(n, p, D));
        if (p < n) {
          REQUIRE(hs.degree() + 1 == dreg_formula(n, p, D));
          if (D == 2) REQUIRE(hs.degree() == 2 * (p - 1) + 1);
        }
      }
    }
  }
}

TEST_CASE("square systems: p = n gives the complete-intersection series") {
  // No maximal minors exist, so the ideal is <F> and its regularity is the
  // Macaulay bound n(D-1)+1, not the critical-point formula.
  for (int n = 1; n <= 8; ++n) {
    for (int D = 2; D <= 4; ++D) {
      const int t = default_truncation(n, n, D);
      const PowerSeries ci =
          divide_exact(PowerSeries::one_minus_power(D, n), PowerSeries::one_minus_power(1, n));
      const PowerSeries hs = hs_unmixed(n, n, D, t);
      CHECK(hs == ci.truncated(t));
      CHECK(hs.degree() + 1 == n * (D - 1) + 1);
      if (n >= 2) CHECK(hs.degree() + 1 != dreg_formula(n, n, D));
    }
  }
}

TEST_CASE("unmixed series against the complete-intersection formula for p = 1") {
  // p = 1: F plus the n-1 partials form a complete intersection of degrees
  // D, D-1, ..., D-1 in n variables.
  for (int n = 2; n <= 6; ++n) {
    for (int D = 2; D <= 4; ++D) {
      PowerSeries num = PowerSeries::one_minus_power(D) * PowerSeries::one_minus_power(D - 1, n - 1);
      const PowerSeries expect = divide_exact(num, PowerSeries::one_minus_power(1, n));
      const int t = default_truncation(n, 1, D);
      CHECK(hs_unmixed(n, 1, D, t) == expect.truncated(t));
    }
  }
}
