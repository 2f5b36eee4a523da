#include <algorithm>
#include <stdexcept>

#include "critpoints/groebner.hpp"

namespace critpoints {

namespace {

using Numerator = std::vector<std::int64_t>;

void add_into(Numerator& acc, const Numerator& x, int shift) {
  if (acc.size() < x.size() + shift) acc.resize(x.size() + shift, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (__builtin_add_overflow(acc[i + shift], x[i], &acc[i + shift])) {
      throw std::overflow_error("Hilbert numerator coefficient overflow");
    }
  }
}

Numerator times_one_minus(const Numerator& x, int k) {
  Numerator out(x.size() + k, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] += x[i];
    out[i + k] -= x[i];
  }
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool divisible = std::any_of(out.begin(), out.end(), [&](const Monomial& m) { return m.divides(g); });
    if (!divisible) out.push_back(g);
  }
  return out;
}

/// Numerator N with HS = N / (1 - t)^n, by pivoting on a power of the most
/// frequent variable: N(I) = N(I + <x^e>) + t^e N(I : x^e).
Numerator numerator(std::vector<Monomial> gens, int nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  // Pairwise coprime generators factor into a product.
  std::vector<int> count(nvars, 0);
  for (const auto& g : gens) {
    for (int i = 0; i < nvars; ++i) count[i] += g[i] != 0;
  }
  if (std::all_of(count.begin(), count.end(), [](int c) { return c <= 1; })) {
    Numerator n{1};
    for (const auto& g : gens) n = times_one_minus(n, g.degree());
    return n;
  }
  const int var = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  // The smallest positive exponent: every generator involving the variable
  // is then divisible by the pivot, so both branches shrink.
  int e = kMaxExponent;
  for (const auto& g : gens) {
    if (g[var] != 0) e = std::min(e, g[var]);
  }
  std::vector<int> pv(nvars, 0);
  pv[var] = e;
  const Monomial pivot(nvars, pv);

  std::vector<Monomial> sum_gens;
  for (const auto& g : gens) {
    if (!pivot.divides(g)) sum_gens.push_back(g);
  }
  sum_gens.push_back(pivot);
  std::vector<Monomial> quot_gens;
  for (const auto& g : gens) {
    std::vector<int> ex(nvars);
    for (int i = 0; i < nvars; ++i) ex[i] = g[i];
    ex[var] = std::max(0, ex[var] - e);
    quot_gens.emplace_back(nvars, ex);
  }
  Numerator out = numerator(std::move(sum_gens), nvars);
  add_into(out, numerator(std::move(quot_gens), nvars), e);
  return out;
}

}  // namespace

bool is_zero_dimensional(const GroebnerBasis& basis) {
  if (basis.is_unit()) return true;
  const int n = basis.ring().nvars;
  std::vector<bool> hit(n, false);
  for (const auto& m : basis.leading_monomials()) {
    for (int i = 0; i < n; ++i) {
      if (m[i] == m.degree() && m.degree() > 0) hit[i] = true;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<Monomial> staircase(const GroebnerBasis& basis) {
  if (!is_zero_dimensional(basis)) throw NotZeroDimensional();
  std::vector<Monomial> out;
  if (basis.is_unit()) return out;
  const int n = basis.ring().nvars;
  const auto lms = basis.leading_monomials();
  auto standard = [&](const Monomial& m) {
    return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  // Each standard monomial is reached once, from the quotient by its
  // highest-index variable.
  std::vector<std::pair<Monomial, int>> stack{{Monomial(n), 0}};
  while (!stack.empty()) {
    auto [m, first] = stack.back();
    stack.pop_back();
    out.push_back(m);
    for (int j = first; j < n; ++j) {
      Monomial next = m * Monomial::variable(n, j);
      if (standard(next)) stack.emplace_back(next, j);
    }
  }
  const MonomialOrder order = basis.order();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return compare(a, b, order) < 0; });
  return out;
}

PowerSeries hilbert_series_of_monomial_ideal(std::span<const Monomial> generators, int nvars,
                                             int truncation) {
  std::vector<Monomial> gens(generators.begin(), generators.end());
  Numerator num = numerator(std::move(gens), nvars);
  std::vector<BigInt> coeffs(num.begin(), num.end());
  return series_divide(PowerSeries(std::move(coeffs)), PowerSeries::one_minus_power(1, nvars),
                       truncation);
}

PowerSeries hilbert_series_from_lm(const GroebnerBasis& basis, int truncation) {
  const auto lms = basis.leading_monomials();
  return hilbert_series_of_monomial_ideal(lms, basis.ring().nvars, truncation);
}

}  // namespace critpoints
