#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"

#include "critpoints/fglm.hpp"
#include "critpoints/hilbert.hpp"
#include "support.hpp"

using namespace critpoints;
using testing::mono;
using testing::poly;

namespace {

GroebnerBasis circle_basis() {
  const Ring r(PrimeField(), 2);
  const std::vector<Polynomial> gens{
      poly(r, {{1, mono({2, 0})}, {1, mono({0, 2})}, {-1, mono({0, 0})}}),
      poly(r, {{2, mono({0, 1})}})};
  return groebner_basis(gens, MonomialOrder::kGrevlex);
}

PolySystem critical(int n, int p, int D, std::uint64_t seed, std::uint32_t q = 65521) {
  return build_critical_system(gen_random_system(PrimeField(q), n, p, D, seed, false));
}

// Random element of the ideal: sum of small multiples of the generators.
Polynomial random_member(const std::vector<Polynomial>& gens, std::mt19937_64& rng) {
  Polynomial acc(gens.front().ring());
  for (const auto& g : gens) acc = acc + testing::random_poly(g.ring(), 2, 3, rng) * g;
  return acc;
}

}  // namespace

TEST_CASE("multiplication matrices of the circle ideal") {
  const GroebnerBasis gb = circle_basis();
  const MultiplicationMatrices m = multiplication_matrices(gb);
  REQUIRE(m.dim() == 2);
  CHECK(m.staircase() == std::vector<Monomial>{mono({0, 0}), mono({1, 0})});
  CHECK(m.entry(0, 0, 0) == 0);
  CHECK(m.entry(0, 1, 0) == 1);
  CHECK(m.entry(0, 0, 1) == 1);
  CHECK(m.entry(0, 1, 1) == 0);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) CHECK(m.entry(1, i, j) == 0);
  }
  CHECK(matrices_commute(m));
  CHECK(density(m, 0).density == doctest::Approx(50.0));
  CHECK(density(m, 1).density == doctest::Approx(0.0));
  CHECK(density(m).density == doctest::Approx(25.0));
  CHECK(density(m).nnz == 2);
  CHECK(density(m).total == 8);
}

TEST_CASE("maximal ideal has zero 1x1 matrices") {
  const Ring r(PrimeField(), 3);
  std::vector<Polynomial> vars;
  for (int i = 0; i < 3; ++i) vars.push_back(Polynomial::variable(r, i));
  const MultiplicationMatrices m = multiplication_matrices(groebner_basis(vars, MonomialOrder::kGrevlex));
  REQUIRE(m.dim() == 1);
  for (int v = 0; v < 3; ++v) CHECK(m.entry(v, 0, 0) == 0);
  CHECK(density(m).density == 0.0);
}

TEST_CASE("matrices commute and match normal forms") {
  std::mt19937_64 rng(61);
  for (auto [n, p, D] : {std::tuple{4, 2, 2}, {5, 2, 2}, {4, 1, 3}, {3, 2, 3}}) {
    const GroebnerBasis gb = groebner_basis(critical(n, p, D, 1), MonomialOrder::kGrevlex);
    const MultiplicationMatrices m = multiplication_matrices(gb);
    REQUIRE(m.dim() == staircase(gb).size());
    CHECK(matrices_commute(m));
    // Explicit T_i T_j = T_j T_i on random vectors.
    const std::uint32_t q = gb.ring().field.modulus();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::vector<std::uint32_t> v(m.dim()), a(m.dim()), b(m.dim()), c(m.dim()), d(m.dim());
        for (auto& x : v) x = static_cast<std::uint32_t>(rng() % q);
        m.apply(j, v, a);
        m.apply(i, a, b);
        m.apply(i, v, c);
        m.apply(j, c, d);
        REQUIRE(b == d);
      }
    }
    Reducer reducer(gb);
    const auto& stair = m.staircase();
    for (int k = 0; k < 30; ++k) {
      const std::size_t col = rng() % stair.size();
      const int var = static_cast<int>(rng() % n);
      const Polynomial prod = Polynomial::from_terms(
          gb.ring(), {{stair[col] * Monomial::variable(n, var), gb.ring().field.one()}});
      const Polynomial nf = reducer.normal_form(prod);
      std::vector<std::uint32_t> expect(m.dim(), 0);
      for (const auto& t : nf.terms()) expect[*m.index_of(t.monomial)] = t.coeff.value;
      std::vector<std::uint32_t> got(m.dim());
      for (std::size_t row = 0; row < m.dim(); ++row) got[row] = m.entry(var, row, col);
      REQUIRE(got == expect);
    }
  }
}

TEST_CASE("lex basis of the circle and its points") {
  const GroebnerBasis gb = circle_basis();
  const GroebnerBasis lex = fglm_lex(gb, multiplication_matrices(gb));
  const Ring rl(PrimeField(), 2, MonomialOrder::kLex);
  REQUIRE(lex.size() == 2);
  CHECK(lex.basis()[0] == poly(rl, {{1, mono({0, 1})}}));
  CHECK(lex.basis()[1] == poly(rl, {{1, mono({2, 0})}, {-1, mono({0, 0})}}));
  const SolutionSample s = sample_solutions(lex);
  CHECK_FALSE(s.shape_position);  // triangular, not shape
  auto pts = s.points;
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a[0].value < b[0].value; });
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == std::vector<FieldElement>{{1}, {0}});
  CHECK(pts[1] == std::vector<FieldElement>{{65520}, {0}});

  const Ring r(PrimeField(), 2);
  PolySystem f{r, {poly(r, {{1, mono({2, 0})}, {1, mono({0, 2})}, {-1, mono({0, 0})}})}, {1, 2, 0, false}};
  CHECK(verify_rank_deficiency(f, pts) == std::vector<bool>{true, true});
  const std::vector<FieldElement> off{{0}, {1}};
  CHECK(truncated_jacobian_rank(f, off) == 1);
}

TEST_CASE("eliminant without rational roots") {
  const PrimeField k;
  // Euler's criterion picks a quadratic non-residue.
  std::uint32_t c = 2;
  while (k.pow({c}, (k.modulus() - 1) / 2).value != k.modulus() - 1) ++c;
  const Ring r(k, 2);
  const std::vector<Polynomial> gens{poly(r, {{1, mono({0, 1})}}),
                                     poly(r, {{1, mono({2, 0})}, {-static_cast<std::int64_t>(c), mono({0, 0})}})};
  const GroebnerBasis gb = groebner_basis(gens, MonomialOrder::kGrevlex);
  const SolutionSample s = sample_solutions(fglm_lex(gb, multiplication_matrices(gb)));
  CHECK_FALSE(s.shape_position);
  CHECK(s.points.empty());
}

TEST_CASE("FGLM agrees with a direct lex computation") {
  for (auto [n, p, D] : {std::tuple{2, 1, 2}, {3, 1, 2}, {3, 2, 2}, {3, 1, 3}, {2, 1, 3}, {2, 1, 4}}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const PolySystem crit = critical(n, p, D, seed);
      const GroebnerBasis gb = groebner_basis(crit, MonomialOrder::kGrevlex);
      const GroebnerBasis lex = fglm_lex(gb, multiplication_matrices(gb));
      const GroebnerBasis direct = groebner_basis(crit, MonomialOrder::kLex);
      REQUIRE(lex.order() == MonomialOrder::kLex);
      CHECK(lex.basis() == direct.basis());
    }
  }
}

TEST_CASE("lex bases pass the Buchberger check and generate the same ideal") {
  std::mt19937_64 rng(71);
  for (auto [n, p, D] : {std::tuple{5, 2, 2}, {4, 3, 2}, {4, 1, 3}}) {
    const PolySystem crit = critical(n, p, D, 2);
    const GroebnerBasis gb = groebner_basis(crit, MonomialOrder::kGrevlex);
    const GroebnerBasis lex = fglm_lex(gb, multiplication_matrices(gb));
    CHECK(buchberger_check(lex));
    CHECK(staircase(lex).size() == staircase(gb).size());
    for (const auto& g : gb.basis()) CHECK(normal_form(g, lex).is_zero());
    for (const auto& g : lex.basis()) CHECK(normal_form(g, gb).is_zero());
    for (int k = 0; k < 100; ++k) {
      const Polynomial f = k % 2 ? random_member(crit.generators, rng)
                                 : testing::random_poly(gb.ring(), D, 5, rng);
      REQUIRE(normal_form(f, gb).is_zero() == normal_form(f, lex).is_zero());
      if (k % 2) REQUIRE(normal_form(f, lex).is_zero());
    }
  }
}

TEST_CASE("rational points match brute-force enumeration over GF(101)") {
  const std::uint32_t q = 101;
  const PrimeField k(q);
  int checked = 0;
  for (auto [n, p, D] : {std::tuple{2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {3, 2, 2}, {3, 1, 3}}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const PolySystem sys = gen_random_system(k, n, p, D, seed, false);
      const PolySystem crit = build_critical_system(sys);
      const GroebnerBasis gb = groebner_basis(crit, MonomialOrder::kGrevlex);
      if (!is_zero_dimensional(gb)) continue;
      const SolutionSample s = sample_solutions(fglm_lex(gb, multiplication_matrices(gb)));
      std::vector<std::vector<FieldElement>> brute;
      std::vector<FieldElement> pt(n);
      const std::size_t total = static_cast<std::size_t>(std::pow(q, n));
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (int i = 0; i < n; ++i) {
          pt[i] = {static_cast<std::uint32_t>(rest % q)};
          rest /= q;
        }
        bool zero = true;
        for (const auto& g : crit.generators) zero = zero && evaluate(g, pt).value == 0;
        if (zero) brute.push_back(pt);
      }
      auto got = s.points;
      std::sort(got.begin(), got.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](auto x, auto y) { return x.value < y.value; });
      });
      std::sort(brute.begin(), brute.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](auto x, auto y) { return x.value < y.value; });
      });
      CHECK(got == brute);
      const auto deficient = verify_rank_deficiency(sys, got);
      for (bool b : deficient) CHECK(b);
      ++checked;
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("variety points off the critical locus have full rank") {
  for (auto [n, p, D] : {std::tuple{4, 2, 2}, {5, 2, 2}, {4, 1, 3}}) {
    const PolySystem sys = gen_random_system(PrimeField(), n, p, D, 3, false);
    const auto pt = sample_variety_point(sys, 99);
    REQUIRE(pt.has_value());
    for (const auto& f : sys.generators) CHECK(evaluate(f, *pt).value == 0);
    CHECK(truncated_jacobian_rank(sys, *pt) == p);
    const std::vector<std::vector<FieldElement>> one{*pt};
    CHECK(verify_rank_deficiency(sys, one) == std::vector<bool>{false});
  }
}

TEST_CASE("affine instance in shape position") {
  const PolySystem sys = gen_random_system(PrimeField(), 5, 2, 2, 0, false);
  const PolySystem crit = build_critical_system(sys);
  const GroebnerBasis gb = groebner_basis(crit, MonomialOrder::kGrevlex);
  const MultiplicationMatrices m = multiplication_matrices(gb);
  CHECK(m.dim() == 16);
  const GroebnerBasis lex = fglm_lex(gb, m);
  CHECK(is_shape_position(lex));
  CHECK(lex.size() == 5);
  const SolutionSample s = sample_solutions(lex);
  for (const auto& pt : s.points) {
    for (const auto& g : crit.generators) CHECK(evaluate(g, pt).value == 0);
  }
  const auto deficient = verify_rank_deficiency(sys, s.points);
  CHECK(std::all_of(deficient.begin(), deficient.end(), [](bool b) { return b; }));
}
