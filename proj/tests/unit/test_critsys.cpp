#include <random>

#include "doctest.h"

#include "critpoints/series.hpp"
#include "support.hpp"

using namespace critpoints;
using testing::mono;

namespace {

// Evaluated jac(F, drop) as a dense matrix.
std::vector<std::vector<FieldElement>> eval_matrix(const PolyMatrix& m,
                                                   const std::vector<FieldElement>& pt) {
  std::vector<std::vector<FieldElement>> out(m.rows(), std::vector<FieldElement>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out[i][j] = evaluate(m.at(i, j), pt);
  }
  return out;
}

}  // namespace

TEST_CASE("random systems have the requested shape") {
  const PrimeField f;
  const PolySystem a = gen_random_system(f, 2, 1, 2, 0, false);
  REQUIRE(a.generators.size() == 1);
  CHECK(a.generators[0].size() <= 6);
  CHECK(a.generators[0].total_degree() == 2);
  const PolySystem h = gen_random_system(f, 3, 1, 2, 0, true);
  CHECK(h.generators[0].size() <= 6);
  CHECK(h.generators[0].is_homogeneous());
  for (std::uint64_t seed : {0, 1, 7}) {
    const PolySystem s1 = gen_random_system(f, 5, 2, 3, seed, false);
    const PolySystem s2 = gen_random_system(f, 5, 2, 3, seed, false);
    CHECK(s1.generators == s2.generators);
    CHECK(s1.meta.seed == seed);
    CHECK(s1.generators[0].size() >= 50);  // 56 slots, zeros are rare
  }
  CHECK(gen_random_system(f, 5, 2, 3, 0, false).generators !=
        gen_random_system(f, 5, 2, 3, 1, false).generators);
}

TEST_CASE("truncated Jacobian and minors on hand examples") {
  const Ring r(PrimeField(), 2);
  const auto x = [&](int i) { return Polynomial::variable(r, i); };
  const Polynomial one = Polynomial::constant(r, r.field.one());
  PolySystem circle{r, {x(0) * x(0) + x(1) * x(1) - one}, {1, 2, 0, false}};
  const PolyMatrix j1 = truncated_jacobian(circle, 1);
  REQUIRE(j1.rows() == 1);
  REQUIRE(j1.cols() == 1);
  CHECK(j1.at(0, 0) == x(1).scale({2}));
  const PolyMatrix j0 = truncated_jacobian(circle, 0);
  CHECK(j0.at(0, 0) == x(0).scale({2}));
  CHECK(j0.at(0, 1) == x(1).scale({2}));
  const PolySystem crit = build_critical_system(circle);
  REQUIRE(crit.generators.size() == 2);
  CHECK(crit.generators[1] == x(1).scale({2}));

  const Ring r4(PrimeField(), 4);
  PolyMatrix m(r4, 2, 2);
  for (int i = 0; i < 4; ++i) m.at(i / 2, i % 2) = Polynomial::variable(r4, i);
  const auto minors = maximal_minors(m);
  REQUIRE(minors.size() == 1);
  CHECK(minors[0] == Polynomial::variable(r4, 0) * Polynomial::variable(r4, 3) -
                         Polynomial::variable(r4, 1) * Polynomial::variable(r4, 2));
  PolyMatrix row(r4, 1, 3);
  for (int j = 0; j < 3; ++j) row.at(0, j) = Polynomial::variable(r4, j);
  const auto entries = maximal_minors(row);
  REQUIRE(entries.size() == 3);
  for (int j = 0; j < 3; ++j) CHECK(entries[j] == Polynomial::variable(r4, j));
  PolyMatrix wide(r4, 2, 3);
  CHECK(maximal_minors(wide).size() == 3);
}

TEST_CASE("generator counts and square systems") {
  const PrimeField f;
  const PolySystem s = gen_random_system(f, 9, 4, 2, 0, false);
  CHECK(build_critical_system(s).generators.size() == 74);
  for (int n = 2; n <= 7; ++n) {
    for (int p = 1; p < n; ++p) {
      const PolySystem sys = gen_random_system(f, n, p, 2, 3, false);
      CHECK(build_critical_system(sys).generators.size() ==
            static_cast<std::size_t>(p) + binomial(n - 1, p).convert_to<std::size_t>());
    }
  }
  CHECK_THROWS(build_critical_system(gen_random_system(f, 3, 3, 2, 0, false)));
}

TEST_CASE("homogeneous minors have degree p(D-1)") {
  const PrimeField f;
  for (auto [n, p, D] : {std::tuple{4, 2, 2}, {5, 2, 3}, {5, 3, 2}, {4, 1, 4}}) {
    const PolySystem sys = gen_random_system(f, n, p, D, 9, true);
    const PolySystem crit = build_critical_system(sys);
    for (std::size_t k = p; k < crit.generators.size(); ++k) {
      const Polynomial& g = crit.generators[k];
      if (g.is_zero()) continue;
      CHECK(g.is_homogeneous());
      CHECK(g.total_degree() == p * (D - 1));
    }
  }
}

TEST_CASE("minors match Leibniz determinants at random points") {
  const PrimeField f;
  std::mt19937_64 rng(21);
  for (auto [n, p, D] : {std::tuple{4, 2, 2}, {6, 3, 2}, {5, 2, 3}, {6, 3, 3}, {5, 1, 3}, {36, 2, 2}}) {
    const PolySystem sys = gen_random_system(f, n, p, D, 4, false);
    const PolyMatrix jac = truncated_jacobian(sys, 1);
    const auto minors = maximal_minors(jac);
    for (int trial = 0; trial < 5; ++trial) {
      const auto pt = testing::random_point(f, n, rng);
      const auto m = eval_matrix(jac, pt);
      // Column subsets in lexicographic order.
      std::vector<int> cols(p);
      for (int i = 0; i < p; ++i) cols[i] = i;
      std::size_t idx = 0;
      while (true) {
        std::vector<std::vector<FieldElement>> sub(p, std::vector<FieldElement>(p));
        for (int i = 0; i < p; ++i) {
          for (int j = 0; j < p; ++j) sub[i][j] = m[i][cols[j]];
        }
        REQUIRE(idx < minors.size());
        REQUIRE(evaluate(minors[idx], pt) == testing::leibniz_det(f, sub));
        ++idx;
        int i = p - 1;
        while (i >= 0 && cols[i] == jac.cols() - p + i) --i;
        if (i < 0) break;
        ++cols[i];
        for (int j = i + 1; j < p; ++j) cols[j] = cols[j - 1] + 1;
      }
      REQUIRE(idx == minors.size());
    }
  }
}

TEST_CASE("top components and variable matrices") {
  const Ring r(PrimeField(), 3);
  const auto x = [&](int i) { return Polynomial::variable(r, i); };
  const Polynomial three = Polynomial::constant(r, {3});
  PolySystem s{r, {x(0) * x(0) + x(1) + three, x(0) * x(1) + x(0) + x(1)}, {2, 2, 0, false}};
  const PolySystem top = top_components(s);
  CHECK(top.generators[0] == x(0) * x(0));
  CHECK(top.generators[1] == x(0) * x(1));
  CHECK(top_components(top).generators == top.generators);

  const PolySystem u1 = variable_matrix_minors(PrimeField(), 1, 3);
  REQUIRE(u1.generators.size() == 3);
  for (int j = 0; j < 3; ++j) CHECK(u1.generators[j] == Polynomial::variable(u1.ring, j));
  const PolySystem u22 = variable_matrix_minors(PrimeField(), 2, 2);
  const auto u = [&](int i) { return Polynomial::variable(u22.ring, i); };
  REQUIRE(u22.generators.size() == 1);
  CHECK(u22.generators[0] == u(0) * u(3) - u(1) * u(2));
  const PolySystem u23 = variable_matrix_minors(PrimeField(), 2, 3);
  REQUIRE(u23.generators.size() == 3);
  for (const auto& g : u23.generators) CHECK(g.total_degree() == 2);
}
