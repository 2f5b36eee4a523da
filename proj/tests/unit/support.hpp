#pragma once
// Test-only oracles: a textbook Buchberger, Leibniz determinants and random
// polynomials. Deliberately naive and independent of the library's F4 and
// linear algebra.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "critpoints/critsys.hpp"
#include "critpoints/groebner.hpp"
#include "critpoints/polynomial.hpp"

namespace testing {

using namespace critpoints;

inline Monomial mono(std::initializer_list<int> e) {
  std::vector<int> v(e);
  return Monomial(static_cast<int>(v.size()), v);
}

inline Polynomial poly(const Ring& r, std::initializer_list<std::pair<std::int64_t, Monomial>> terms) {
  std::vector<Term> t;
  for (const auto& [c, m] : terms) t.push_back({m, r.field.from_int(c)});
  return Polynomial::from_terms(r, t);
}

inline Polynomial random_poly(const Ring& r, int max_degree, int nterms, std::mt19937_64& rng) {
  std::vector<Term> t;
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::uint32_t> coef(1, r.field.modulus() - 1);
  for (int k = 0; k < nterms; ++k) {
    std::vector<int> e(r.nvars, 0);
    int d = deg(rng);
    std::uniform_int_distribution<int> var(0, r.nvars - 1);
    for (int s = 0; s < d; ++s) ++e[var(rng)];
    t.push_back({Monomial(r.nvars, e), {coef(rng)}});
  }
  return Polynomial::from_terms(r, t);
}

inline FieldElement random_element(const PrimeField& f, std::mt19937_64& rng) {
  return {std::uniform_int_distribution<std::uint32_t>(0, f.modulus() - 1)(rng)};
}

inline std::vector<FieldElement> random_point(const PrimeField& f, int n, std::mt19937_64& rng) {
  std::vector<FieldElement> pt(n);
  for (auto& x : pt) x = random_element(f, rng);
  return pt;
}

// Multivariate division by leading terms, remainder only.
inline Polynomial naive_remainder(Polynomial f, const std::vector<Polynomial>& g) {
  const Ring& r = f.ring();
  Polynomial rem(r);
  while (!f.is_zero()) {
    const Term lead = f.terms().front();
    bool divided = false;
    for (const auto& h : g) {
      if (h.is_zero() || !h.leading_monomial().divides(lead.monomial)) continue;
      const FieldElement c = r.field.div(lead.coeff, h.leading_coefficient());
      f = f - h.mul_term(lead.monomial / h.leading_monomial(), c);
      divided = true;
      break;
    }
    if (!divided) {
      rem = rem + Polynomial::from_terms(r, {lead});
      f = f - Polynomial::from_terms(r, {lead});
    }
  }
  return rem;
}

inline Polynomial naive_spoly(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const PrimeField& k = f.ring().field;
  return f.mul_term(l / f.leading_monomial(), k.inv(f.leading_coefficient())) -
         g.mul_term(l / g.leading_monomial(), k.inv(g.leading_coefficient()));
}

// Plain Buchberger with only the coprime criterion, then minimal + reduced + monic, sorted by
// increasing leading monomial.
inline std::vector<Polynomial> naive_groebner(std::vector<Polynomial> gens) {
  std::vector<Polynomial> g;
  for (auto& f : gens) {
    if (!f.is_zero()) g.push_back(f.monic());
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    if (g[i].leading_monomial().coprime(g[j].leading_monomial())) continue;
    Polynomial h = naive_remainder(naive_spoly(g[i], g[j]), g);
    if (h.is_zero()) continue;
    g.push_back(h.monic());
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const bool divides = g[j].leading_monomial().divides(g[i].leading_monomial());
      const bool same = g[j].leading_monomial() == g[i].leading_monomial();
      redundant = divides && (!same || j < i);
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Polynomial lead = Polynomial::from_terms(minimal[i].ring(), {minimal[i].terms().front()});
    reduced.push_back(lead + naive_remainder(minimal[i] - lead, others));
  }
  const MonomialOrder order = gens.front().ring().order;
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), order) < 0;
  });
  return reduced;
}

// Leibniz expansion over permutations, in GF(q).
inline FieldElement leibniz_det(const PrimeField& f, std::vector<std::vector<FieldElement>> m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  FieldElement total = f.zero();
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    FieldElement term = f.one();
    for (int i = 0; i < n; ++i) term = f.mul(term, m[i][perm[i]]);
    total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Rank over GF(q) by plain Gaussian elimination.
inline int naive_rank(const PrimeField& f, std::vector<std::vector<FieldElement>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][c].value) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    const FieldElement inv = f.inv(m[rank][c]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || !m[r][c].value) continue;
      const FieldElement k = f.mul(m[r][c], inv);
      for (int cc = c; cc < cols; ++cc) m[r][cc] = f.sub(m[r][cc], f.mul(k, m[rank][cc]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace testing
