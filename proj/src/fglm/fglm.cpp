#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

#include "critpoints/fglm.hpp"
#include "critpoints/kernels.hpp"
#include "critpoints/rng.hpp"

namespace critpoints {

namespace {

struct LexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, MonomialOrder::kLex) < 0;
  }
};

// Dense univariate polynomials over GF(q), lowest coefficient first.
using Dense = std::vector<std::uint32_t>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Shape position gives x_i = -tail(g_i)(x_n); collect the univariate data.
struct ShapeData {
  Dense eliminant;
  std::vector<Dense> coordinates;  // x_1..x_{n-1} as polynomials in x_n
};

std::optional<ShapeData> shape_data(const GroebnerBasis& lex) {
  const Ring& ring = lex.ring();
  const int n = ring.nvars;
  if (lex.order() != MonomialOrder::kLex || static_cast<int>(lex.size()) != n || lex.is_unit()) {
    return std::nullopt;
  }
  const PrimeField& f = ring.field;
  auto only_last = [&](const Monomial& m) {
    for (int i = 0; i + 1 < n; ++i) {
      if (m[i] != 0) return false;
    }
    return true;
  };
  ShapeData data;
  data.coordinates.assign(n - 1, {});
  std::vector<bool> seen(n - 1, false);
  for (const auto& g : lex.basis()) {
    const Monomial& lm = g.leading_monomial();
    if (only_last(lm)) {
      if (!data.eliminant.empty()) return std::nullopt;
      Dense h(lm[n - 1] + 1, 0);
      for (const auto& t : g.terms()) h[t.monomial[n - 1]] = t.coeff.value;
      data.eliminant = std::move(h);
      continue;
    }
    if (lm.degree() != 1) return std::nullopt;
    int var = 0;
    while (lm[var] == 0) ++var;
    if (var == n - 1 || seen[var]) return std::nullopt;
    seen[var] = true;
    Dense c;
    for (std::size_t t = 1; t < g.size(); ++t) {
      const Monomial& m = g.terms()[t].monomial;
      if (!only_last(m)) return std::nullopt;
      if (c.size() <= static_cast<std::size_t>(m[n - 1])) c.resize(m[n - 1] + 1, 0);
      c[m[n - 1]] = f.neg(g.terms()[t].coeff).value;
    }
    trim(c);
    data.coordinates[var] = std::move(c);
  }
  if (data.eliminant.empty()) return std::nullopt;
  return data;
}

std::uint32_t horner(const Dense& c, std::uint32_t x, const PrimeField& f) {
  FieldElement acc{0};
  for (std::size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, {x}), {c[i]});
  return acc.value;
}

}  // namespace

GroebnerBasis fglm_lex(const GroebnerBasis& basis, const MultiplicationMatrices& mats) {
  const Ring lex_ring = basis.ring().with_order(MonomialOrder::kLex);
  const int n = lex_ring.nvars;
  const PrimeField& field = lex_ring.field;
  const std::uint32_t q = field.modulus();
  const std::size_t dim = mats.dim();
  if (dim == 0) {
    return GroebnerBasis(lex_ring, {Polynomial::constant(lex_ring, field.one())}, 0);
  }
  const auto one_index = mats.index_of(Monomial(n));
  if (!one_index) throw std::logic_error("staircase without 1");

  // Echelon rows are [normal form (dim) | combination over lex standard
  // monomials (dim, plus the slot of the candidate itself)], monic at their
  // pivot, pivot = first nonzero entry.
  const std::size_t width = 2 * dim + 1;
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::int64_t> pivot_row(dim, -1);

  std::vector<Monomial> lex_standard;
  std::vector<std::vector<std::uint32_t>> lex_nf;  // normal forms of lex_standard
  std::vector<Monomial> lex_leads;
  std::vector<Polynomial> out;

  // candidate -> (lex standard parent, variable), parent SIZE_MAX for 1.
  std::map<Monomial, std::pair<std::size_t, int>, LexLess> candidates;
  candidates.emplace(Monomial(n), std::make_pair(SIZE_MAX, -1));

  std::vector<std::uint32_t> w(width);
  while (!candidates.empty()) {
    auto node = candidates.extract(candidates.begin());
    const Monomial m = node.key();
    const auto [parent, var] = node.mapped();
    if (std::any_of(lex_leads.begin(), lex_leads.end(),
                    [&](const Monomial& l) { return l.divides(m); })) {
      continue;
    }
    std::vector<std::uint32_t> nf(dim, 0);
    if (parent == SIZE_MAX) {
      nf[*one_index] = 1;
    } else {
      mats.apply(var, lex_nf[parent], nf);
    }
    std::fill(w.begin(), w.end(), 0u);
    std::copy(nf.begin(), nf.end(), w.begin());
    const std::size_t self = lex_standard.size();
    w[dim + self] = 1;
    std::span<std::uint32_t> ws(w);
    std::int64_t lead = -1;
    for (std::size_t c = 0; c < dim; ++c) {
      if (w[c] == 0) continue;
      if (pivot_row[c] < 0) {
        if (lead < 0) lead = static_cast<std::int64_t>(c);
        continue;
      }
      const auto& row = rows[static_cast<std::size_t>(pivot_row[c])];
      kernels::axpy_mod(ws.subspan(c), q - w[c], std::span<const std::uint32_t>(row).subspan(c), q);
    }
    if (lead < 0) {
      // NF(m) depends on earlier lex standard monomials: a new lex element.
      std::vector<Term> terms{{m, field.one()}};
      for (std::size_t l = self; l-- > 0;) {
        const std::uint32_t c = w[dim + l];
        if (c != 0) terms.push_back({lex_standard[l], {c}});
      }
      out.push_back(Polynomial::from_terms(lex_ring, std::move(terms)));
      lex_leads.push_back(m);
      continue;
    }
    // Nonzero residual: m is standard for lex.
    const std::size_t L = static_cast<std::size_t>(lead);
    kernels::scale_mod(ws.subspan(L), field.inv({w[L]}).value, q);
    pivot_row[L] = static_cast<std::int64_t>(rows.size());
    rows.emplace_back(w.begin(), w.end());
    lex_standard.push_back(m);
    lex_nf.push_back(std::move(nf));
    if (lex_standard.size() > dim) throw std::logic_error("lex staircase exceeds the quotient dimension");
    for (int j = 0; j < n; ++j) {
      candidates.emplace(m * Monomial::variable(n, j), std::make_pair(self, j));
    }
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), MonomialOrder::kLex) < 0;
  });
  return GroebnerBasis(lex_ring, std::move(out), 0);
}

bool is_shape_position(const GroebnerBasis& lex) { return shape_data(lex).has_value(); }

namespace {

Dense poly_mod(Dense a, const Dense& b, const PrimeField& f) {
  const std::uint32_t q = f.modulus();
  const std::uint32_t inv = f.inv({b.back()}).value;
  while (a.size() >= b.size()) {
    const std::uint32_t c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.back()) * inv % q);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + static_cast<std::uint64_t>(q - c) * b[i]) % q);
    }
    trim(a);
  }
  return a;
}

Dense poly_gcd(Dense a, Dense b, const PrimeField& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = poly_mod(std::move(a), b, f);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Roots in GF(q): read off for degree one, exhaustive evaluation otherwise.
std::vector<std::uint32_t> roots(const Dense& g, const PrimeField& f) {
  std::vector<std::uint32_t> out;
  if (g.size() < 2) return out;
  if (g.size() == 2) {
    out.push_back(f.neg(f.div({g[0]}, {g[1]})).value);
    return out;
  }
  for (std::uint32_t r = 0; r < f.modulus(); ++r) {
    if (horner(g, r, f) == 0) out.push_back(r);
  }
  return out;
}

// Main variable of a lex polynomial: the first variable of its leading monomial.
int main_variable(const Polynomial& g) {
  const Monomial& lm = g.leading_monomial();
  for (int i = 0; i < lm.nvars(); ++i) {
    if (lm[i] != 0) return i;
  }
  return lm.nvars();
}

}  // namespace

SolutionSample sample_solutions(const GroebnerBasis& lex) {
  SolutionSample sample;
  sample.shape_position = is_shape_position(lex);
  if (lex.is_unit() || !is_zero_dimensional(lex)) return sample;
  const PrimeField& f = lex.ring().field;
  const std::uint32_t q = f.modulus();
  const int n = lex.ring().nvars;
  std::vector<std::vector<const Polynomial*>> by_var(n);
  for (const auto& g : lex.basis()) by_var[main_variable(g)].push_back(&g);

  // Partial solutions over x_{k+1}..x_n, extended one variable at a time by
  // the gcd of the basis elements with main variable x_k specialised there.
  std::vector<std::vector<FieldElement>> partial{std::vector<FieldElement>(n)};
  for (int k = n - 1; k >= 0; --k) {
    std::vector<std::vector<FieldElement>> next;
    for (auto& point : partial) {
      Dense g;
      for (const Polynomial* h : by_var[k]) {
        Dense u;
        for (const auto& t : h->terms()) {
          std::uint32_t c = t.coeff.value;
          for (int j = k + 1; j < n && c != 0; ++j) {
            c = f.mul({c}, f.pow(point[j], t.monomial[j])).value;
          }
          const std::size_t e = t.monomial[k];
          if (u.size() <= e) u.resize(e + 1, 0);
          u[e] = (u[e] + c) % q;
        }
        g = poly_gcd(std::move(g), std::move(u), f);
      }
      for (std::uint32_t r : roots(g, f)) {
        point[k] = {r};
        next.push_back(point);
      }
    }
    partial = std::move(next);
  }
  std::sort(partial.begin(), partial.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend(),
                                        [](FieldElement x, FieldElement y) { return x.value < y.value; });
  });
  sample.points = std::move(partial);
  return sample;
}

int truncated_jacobian_rank(const PolySystem& system, std::span<const FieldElement> point) {
  const PolyMatrix jac = truncated_jacobian(system, 1);
  const PrimeField& f = system.ring.field;
  const int rows = jac.rows();
  const int cols = jac.cols();
  std::vector<std::vector<FieldElement>> a(rows, std::vector<FieldElement>(cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) a[r][c] = evaluate(jac.at(r, c), point);
  }
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][c].value != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    const FieldElement inv = f.inv(a[rank][c]);
    for (int r = rank + 1; r < rows; ++r) {
      const FieldElement t = f.mul(a[r][c], inv);
      if (t.value == 0) continue;
      for (int k = c; k < cols; ++k) a[r][k] = f.sub(a[r][k], f.mul(t, a[rank][k]));
    }
    ++rank;
  }
  return rank;
}

std::vector<bool> verify_rank_deficiency(const PolySystem& system,
                                         std::span<const std::vector<FieldElement>> points) {
  const int p = system.meta.p;
  std::vector<bool> out;
  out.reserve(points.size());
  for (const auto& pt : points) out.push_back(truncated_jacobian_rank(system, pt) < p);
  return out;
}

std::optional<std::vector<FieldElement>> sample_variety_point(const PolySystem& system,
                                                              std::uint64_t seed, int attempts) {
  const Ring& ring = system.ring;
  const int n = ring.nvars;
  const int p = system.meta.p;
  const PrimeField& f = ring.field;
  const Ring fibre_ring(f, p, MonomialOrder::kGrevlex);
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<FieldElement> values(n, f.zero());
    std::unique_ptr<bool[]> fixed(new bool[n]);
    for (int i = 0; i < n; ++i) {
      fixed[i] = i >= p;
      if (fixed[i]) values[i] = {static_cast<std::uint32_t>(rng.uniform(f.modulus()))};
    }
    std::vector<Polynomial> fibre;
    for (const auto& g : system.generators) {
      Polynomial s = substitute(g, values, std::span<const bool>(fixed.get(), n));
      std::vector<Term> terms;
      std::vector<int> exps(p);
      for (const auto& t : s.terms()) {
        for (int i = 0; i < p; ++i) exps[i] = t.monomial[i];
        terms.push_back({Monomial(p, exps), t.coeff});
      }
      fibre.push_back(Polynomial::from_terms(fibre_ring, std::move(terms)));
    }
    GroebnerBasis gb = groebner_basis(fibre, MonomialOrder::kGrevlex);
    if (gb.is_unit() || !is_zero_dimensional(gb)) continue;
    const auto mats = multiplication_matrices(gb);
    const auto sols = sample_solutions(fglm_lex(gb, mats));
    if (sols.points.empty()) continue;
    std::vector<FieldElement> point = values;
    for (int i = 0; i < p; ++i) point[i] = sols.points.front()[i];
    return point;
  }
  return std::nullopt;
}

}  // namespace critpoints
