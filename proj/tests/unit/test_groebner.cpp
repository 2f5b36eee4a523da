#include <random>

#include "doctest.h"

#include "critpoints/hilbert.hpp"
#include "support.hpp"

using namespace critpoints;
using testing::mono;
using testing::poly;

namespace {

Ring ring2(MonomialOrder o = MonomialOrder::kGrevlex) { return Ring(PrimeField(), 2, o); }

// Standard monomials of each degree, counted by brute force.
std::vector<BigInt> count_standard(const std::vector<Monomial>& lms, int nvars, int upto) {
  std::vector<BigInt> out;
  for (int d = 0; d < upto; ++d) {
    long long c = 0;
    for (const auto& m : monomials_of_degree(nvars, d, MonomialOrder::kGrevlex)) {
      bool standard = true;
      for (const auto& l : lms) standard = standard && !l.divides(m);
      c += standard;
    }
    out.emplace_back(c);
  }
  return out;
}

void check_matches_oracle(const std::vector<Polynomial>& gens, MonomialOrder order) {
  std::vector<Polynomial> in;
  for (const auto& g : gens) in.push_back(g.with_order(order));
  const GroebnerBasis gb = groebner_basis(in, order);
  const auto oracle = testing::naive_groebner(in);
  REQUIRE(gb.basis() == oracle);
}

}  // namespace

TEST_CASE("circle critical system") {
  const Ring r = ring2();
  const Polynomial f = poly(r, {{1, mono({2, 0})}, {1, mono({0, 2})}, {-1, mono({0, 0})}});
  const Polynomial g = poly(r, {{2, mono({0, 1})}});
  const std::vector<Polynomial> gens{f, g};
  const GroebnerBasis gb = groebner_basis(gens, MonomialOrder::kGrevlex);
  const Polynomial x2 = poly(r, {{1, mono({0, 1})}});
  const Polynomial x1sq = poly(r, {{1, mono({2, 0})}, {-1, mono({0, 0})}});
  REQUIRE(gb.size() == 2);
  CHECK(gb.basis()[0] == x2);
  CHECK(gb.basis()[1] == x1sq);
  CHECK(gb.max_step_degree() <= 2);
  CHECK(staircase(gb) == std::vector<Monomial>{mono({0, 0}), mono({1, 0})});
  CHECK(is_zero_dimensional(gb));
  CHECK(normal_form(poly(r, {{1, mono({2, 0})}}), gb) == poly(r, {{1, mono({0, 0})}}));
  CHECK(normal_form(f, gb).is_zero());
  CHECK(normal_form(Polynomial::constant(r, r.field.one()), gb) ==
        Polynomial::constant(r, r.field.one()));
  CHECK(buchberger_check(gb));
}

TEST_CASE("degenerate inputs") {
  const Ring r = ring2();
  const Polynomial x1 = Polynomial::variable(r, 0);
  const std::vector<Polynomial> dup{x1, x1, Polynomial(r)};
  const GroebnerBasis gb = groebner_basis(dup, MonomialOrder::kGrevlex);
  CHECK(gb.basis() == std::vector<Polynomial>{x1});
  CHECK_FALSE(is_zero_dimensional(gb));
  CHECK_THROWS_AS(staircase(gb), NotZeroDimensional);

  const std::vector<Polynomial> unit{x1, x1 - Polynomial::constant(r, r.field.one())};
  const GroebnerBasis one = groebner_basis(unit, MonomialOrder::kGrevlex);
  CHECK(one.is_unit());
  CHECK(is_zero_dimensional(one));
  CHECK(staircase(one).empty());

  const Ring r3(PrimeField(), 3);
  std::vector<Polynomial> vars;
  for (int i = 0; i < 3; ++i) vars.push_back(Polynomial::variable(r3, i));
  const GroebnerBasis maximal = groebner_basis(vars, MonomialOrder::kGrevlex);
  CHECK(staircase(maximal) == std::vector<Monomial>{Monomial(3)});
}

TEST_CASE("monomial ideal Hilbert series") {
  const auto h1 = hilbert_series_of_monomial_ideal(std::vector<Monomial>{mono({1, 0})}, 2, 6);
  for (int d = 0; d < 6; ++d) CHECK(h1.coeff(d) == 1);
  const std::vector<Monomial> quad{mono({2, 0}), mono({1, 1}), mono({0, 2})};
  const auto h2 = hilbert_series_of_monomial_ideal(quad, 2, 6);
  CHECK(h2.coeffs() == std::vector<BigInt>{1, 2});
  const auto h0 = hilbert_series_of_monomial_ideal({}, 4, 7);
  for (int d = 0; d < 7; ++d) CHECK(h0.coeff(d) == binomial(3 + d, d));

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> e(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Monomial> gens;
    const int k = 1 + trial % 6;
    for (int i = 0; i < k; ++i) {
      std::vector<int> v(4);
      for (auto& x : v) x = e(rng);
      gens.emplace_back(4, v);
    }
    const auto hs = hilbert_series_of_monomial_ideal(gens, 4, 9);
    const auto brute = count_standard(gens, 4, 9);
    for (int d = 0; d < 9; ++d) REQUIRE(hs.coeff(d) == brute[d]);
  }
}

TEST_CASE("F4 agrees with a textbook Buchberger on random ideals") {
  std::mt19937_64 rng(41);
  for (auto order : {MonomialOrder::kGrevlex, MonomialOrder::kLex}) {
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + trial % 2;
      const Ring r(PrimeField(trial % 3 ? 65521 : 101), n, order);
      std::vector<Polynomial> gens;
      // Degree-3 lex in three variables is too much for the textbook oracle.
      const int d = order == MonomialOrder::kLex && n == 3 ? 2 : 2 + trial % 2;
      for (int k = 0; k < n; ++k) gens.push_back(testing::random_poly(r, d, 4, rng));
      CAPTURE(trial);
      check_matches_oracle(gens, order);
    }
  }
}

TEST_CASE("F4 agrees with a textbook Buchberger on small critical systems") {
  const PrimeField f;
  for (auto [n, p, D] : {std::tuple{2, 1, 2}, {3, 1, 2}, {3, 2, 2}, {2, 1, 3}, {3, 1, 3}}) {
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
      const PolySystem crit = build_critical_system(gen_random_system(f, n, p, D, seed, false));
      check_matches_oracle(crit.generators, MonomialOrder::kGrevlex);
      check_matches_oracle(crit.generators, MonomialOrder::kLex);
    }
  }
}

TEST_CASE("normal forms are unique remainders") {
  const PrimeField f;
  std::mt19937_64 rng(51);
  const PolySystem crit = build_critical_system(gen_random_system(f, 4, 2, 2, 3, false));
  const GroebnerBasis gb = groebner_basis(crit, MonomialOrder::kGrevlex);
  Reducer reducer(gb);
  for (int k = 0; k < 40; ++k) {
    const Polynomial p = testing::random_poly(gb.ring(), 5, 6, rng);
    const Polynomial nf = reducer.normal_form(p);
    REQUIRE(nf == testing::naive_remainder(p, gb.basis()));
    REQUIRE(nf == normal_form(p, gb));
    for (const auto& t : nf.terms()) {
      for (const auto& g : gb.basis()) REQUIRE_FALSE(g.leading_monomial().divides(t.monomial));
    }
  }
  // Lex input is accepted and the answer comes back in the basis order.
  const Polynomial lexp = testing::random_poly(gb.ring(), 3, 5, rng).with_order(MonomialOrder::kLex);
  CHECK(reducer.normal_form(lexp) == reducer.normal_form(lexp.with_order(MonomialOrder::kGrevlex)));
}

TEST_CASE("affine critical ideals: membership, checks and degree") {
  const PrimeField f;
  for (auto [n, p, D] : {std::tuple{5, 2, 2}, {4, 1, 3}, {4, 3, 2}, {4, 2, 3}}) {
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
      const PolySystem crit = build_critical_system(gen_random_system(f, n, p, D, seed, false));
      const GroebnerBasis gb = groebner_basis(crit, MonomialOrder::kGrevlex);
      CAPTURE(n);
      CAPTURE(p);
      CAPTURE(D);
      REQUIRE(is_zero_dimensional(gb));
      CHECK(staircase(gb).size() == deg_formula(n, p, D).convert_to<std::size_t>());
      CHECK(gb.max_step_degree() <= dreg_formula(n, p, D));
      CHECK(buchberger_check(gb));
      for (const auto& g : crit.generators) CHECK(normal_form(g, gb).is_zero());
      for (const auto& g : gb.basis()) CHECK(g.leading_coefficient() == f.one());
    }
  }
}

TEST_CASE("staircase size does not depend on the order") {
  const PrimeField f;
  for (auto [n, p, D] : {std::tuple{2, 1, 2}, {3, 1, 2}, {3, 2, 2}, {3, 1, 3}, {2, 1, 3}}) {
    const PolySystem crit = build_critical_system(gen_random_system(f, n, p, D, 5, false));
    const GroebnerBasis g = groebner_basis(crit, MonomialOrder::kGrevlex);
    const GroebnerBasis l = groebner_basis(crit, MonomialOrder::kLex);
    CHECK(staircase(g).size() == staircase(l).size());
    CHECK(staircase(g).size() == deg_formula(n, p, D).convert_to<std::size_t>());
  }
}

TEST_CASE("homogeneous critical ideals") {
  const PrimeField f;
  const PolySystem crit = build_critical_system(gen_random_system(f, 4, 2, 2, 0, true));
  const GroebnerBasis gb = groebner_basis(crit, MonomialOrder::kGrevlex);
  CHECK(gb.max_step_degree() <= 4);
  CHECK(is_zero_dimensional(gb));
  const int t = default_truncation(4, 2, 2);
  const PowerSeries hs = hilbert_series_from_lm(gb, t);
  CHECK(hs.vanishes_beyond_degree());
  CHECK(hs.degree() + 1 == dreg_formula(4, 2, 2));

  // Positive-dimensional homogeneous ideal: the series never stops.
  const Ring r(PrimeField(), 3);
  const std::vector<Polynomial> one{Polynomial::variable(r, 0) * Polynomial::variable(r, 1)};
  const GroebnerBasis pd = groebner_basis(one, MonomialOrder::kGrevlex);
  CHECK_FALSE(is_zero_dimensional(pd));
  CHECK_FALSE(hilbert_series_from_lm(pd, 12).vanishes_beyond_degree());
}

TEST_CASE("degree cap") {
  const PrimeField f;
  const PolySystem crit = build_critical_system(gen_random_system(f, 5, 2, 3, 0, false));
  GroebnerOptions opts;
  opts.degree_cap = 5;
  CHECK_THROWS_AS(groebner_basis(crit, MonomialOrder::kGrevlex, opts), DegreeCapExceeded);
  try {
    groebner_basis(crit, MonomialOrder::kGrevlex, opts);
  } catch (const DegreeCapExceeded& e) {
    CHECK(e.degree() > 5);
  }
  opts.degree_cap = 10;
  CHECK_NOTHROW(groebner_basis(crit, MonomialOrder::kGrevlex, opts));
}

TEST_CASE("S-polynomials") {
  const Ring r = ring2();
  const Polynomial a = poly(r, {{1, mono({2, 0})}, {1, mono({0, 1})}});
  const Polynomial b = poly(r, {{1, mono({1, 1})}, {3, mono({0, 0})}});
  CHECK(s_polynomial(a, b) == testing::naive_spoly(a, b));
}
