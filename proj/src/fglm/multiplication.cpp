#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "critpoints/fglm.hpp"
#include "critpoints/kernels.hpp"

namespace critpoints {

std::uint32_t MultiplicationMatrices::entry(int var, std::size_t row, std::size_t col) const {
  const std::int64_t c = columns_.at(var).at(col);
  if (c >= 0) return static_cast<std::size_t>(c) == row ? 1u : 0u;
  return border_nf_[static_cast<std::size_t>(-(c + 1))].at(row);
}

std::vector<std::uint32_t> MultiplicationMatrices::column(int var, std::size_t col) const {
  const std::int64_t c = columns_.at(var).at(col);
  if (c >= 0) {
    std::vector<std::uint32_t> out(dim(), 0);
    out[static_cast<std::size_t>(c)] = 1;
    return out;
  }
  return border_nf_[static_cast<std::size_t>(-(c + 1))];
}

void MultiplicationMatrices::apply(int var, std::span<const std::uint32_t> v,
                                   std::span<std::uint32_t> out) const {
  const std::size_t n = dim();
  if (v.size() != n || out.size() != n) throw std::invalid_argument("dimension mismatch");
  std::fill(out.begin(), out.end(), 0u);
  const auto& cols = columns_.at(var);
  for (std::size_t s = 0; s < n; ++s) {
    const std::uint32_t a = v[s];
    if (a == 0) continue;
    const std::int64_t c = cols[s];
    if (c >= 0) {
      std::uint32_t& y = out[static_cast<std::size_t>(c)];
      y = static_cast<std::uint32_t>((static_cast<std::uint64_t>(y) + a) % q_);
    } else {
      kernels::axpy_mod(out, a, border_nf_[static_cast<std::size_t>(-(c + 1))], q_);
    }
  }
}

std::optional<std::size_t> MultiplicationMatrices::index_of(const Monomial& m) const {
  auto it = standard_.find(m);
  if (it == standard_.end()) return std::nullopt;
  return it->second;
}

std::size_t MultiplicationMatrices::nonzeros(int var) const {
  std::size_t nnz = 0;
  for (std::int64_t c : columns_.at(var)) {
    nnz += c >= 0 ? 1 : border_nnz_[static_cast<std::size_t>(-(c + 1))];
  }
  return nnz;
}

MultiplicationMatrices multiplication_matrices(const GroebnerBasis& basis) {
  const Ring& ring = basis.ring();
  const int n = ring.nvars;
  const std::uint32_t q = ring.field.modulus();
  MultiplicationMatrices out;
  out.q_ = q;
  out.staircase_ = staircase(basis);
  const std::size_t dim = out.staircase_.size();
  out.columns_.assign(n, std::vector<std::int64_t>(dim, 0));
  if (dim == 0) return out;

  auto& standard = out.standard_;
  for (std::size_t i = 0; i < dim; ++i) standard.emplace(out.staircase_[i], i);
  std::unordered_map<Monomial, std::size_t, MonomialHash> leading;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    leading.emplace(basis.basis()[i].leading_monomial(), i);
  }

  // Border monomials x_j * s outside the staircase.
  std::unordered_map<Monomial, std::size_t, MonomialHash> border_index;
  for (const auto& s : out.staircase_) {
    for (int j = 0; j < n; ++j) {
      Monomial b = s * Monomial::variable(n, j);
      if (!standard.count(b)) border_index.emplace(b, 0);
    }
  }
  out.border_.reserve(border_index.size());
  for (const auto& [m, _] : border_index) out.border_.push_back(m);
  std::sort(out.border_.begin(), out.border_.end(), [&](const Monomial& a, const Monomial& b) {
    return compare(a, b, ring.order) < 0;
  });
  for (std::size_t i = 0; i < out.border_.size(); ++i) border_index[out.border_[i]] = i;

  const PrimeField& field = ring.field;
  out.border_nf_.assign(out.border_.size(), {});
  out.border_nnz_.assign(out.border_.size(), 0);
  out.border_route_.assign(out.border_.size(), -1);
  for (std::size_t bi = 0; bi < out.border_.size(); ++bi) {
    const Monomial& b = out.border_[bi];
    std::vector<std::uint32_t> nf(dim, 0);
    if (auto it = leading.find(b); it != leading.end()) {
      const Polynomial& g = basis.basis()[it->second];
      for (std::size_t t = 1; t < g.size(); ++t) {
        auto st = standard.find(g.terms()[t].monomial);
        if (st == standard.end()) {
          throw std::invalid_argument("multiplication matrices need a reduced basis");
        }
        nf[st->second] = field.neg(g.terms()[t].coeff).value;
      }
    } else {
      // b = x_k * b' with b' an earlier border monomial.
      int k = -1;
      std::size_t parent = 0;
      for (int j = 0; j < n && k < 0; ++j) {
        if (b[j] == 0) continue;
        auto it = border_index.find(b / Monomial::variable(n, j));
        if (it != border_index.end()) {
          k = j;
          parent = it->second;
        }
      }
      if (k < 0) throw std::logic_error("border monomial without a border parent");
      out.border_route_[bi] = k;
      const auto& pnf = out.border_nf_[parent];
      for (std::size_t s = 0; s < dim; ++s) {
        const std::uint32_t a = pnf[s];
        if (a == 0) continue;
        Monomial xs = out.staircase_[s] * Monomial::variable(n, k);
        if (auto st = standard.find(xs); st != standard.end()) {
          nf[st->second] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(nf[st->second]) + a) % q);
        } else {
          kernels::axpy_mod(nf, a, out.border_nf_[border_index.at(xs)], q);
        }
      }
    }
    out.border_nnz_[bi] = static_cast<std::size_t>(
        std::count_if(nf.begin(), nf.end(), [](std::uint32_t v) { return v != 0; }));
    out.border_nf_[bi] = std::move(nf);
  }

  for (int j = 0; j < n; ++j) {
    for (std::size_t s = 0; s < dim; ++s) {
      Monomial xs = out.staircase_[s] * Monomial::variable(n, j);
      if (auto st = standard.find(xs); st != standard.end()) {
        out.columns_[j][s] = static_cast<std::int64_t>(st->second);
      } else {
        out.columns_[j][s] = -static_cast<std::int64_t>(border_index.at(xs)) - 1;
      }
    }
  }
  return out;
}

bool matrices_commute(const MultiplicationMatrices& m) {
  const std::size_t dim = m.dim();
  const int n = m.nvars();
  const std::uint32_t q = m.modulus();
  auto border_of = [&](int var, std::size_t col) {
    return static_cast<std::size_t>(-(m.columns_[var][col] + 1));
  };

  // Compare T_i (T_j e_s) with T_j (T_i e_s). With both products standard,
  // both sides are the one stored normal form of x_i x_j s; with one
  // standard, the check is vacuous when that normal form was built along
  // the other route. Everything else needs products T_k NF(b), gathered per
  // variable and computed as one dense product.
  struct Check {
    int i, j;
    std::size_t s;
  };
  std::vector<Check> checks;
  std::vector<std::vector<std::size_t>> need(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (std::size_t s = 0; s < dim; ++s) {
        const auto xi = m.unit_column(i, s);
        const auto xj = m.unit_column(j, s);
        if (xi && xj) continue;
        if (xj && m.border_route_[border_of(i, *xj)] == j) continue;
        if (xi && m.border_route_[border_of(j, *xi)] == i) continue;
        if (!xj) need[i].push_back(border_of(j, s));
        if (!xi) need[j].push_back(border_of(i, s));
        checks.push_back({i, j, s});
      }
    }
  }

  // products[k][b] = T_k NF(border b), for the b in need[k].
  std::vector<std::unordered_map<std::size_t, std::vector<std::uint32_t>>> products(n);
  std::vector<std::uint32_t> dense_t(dim * dim);
  constexpr std::size_t kBatch = 512;
  for (int k = 0; k < n; ++k) {
    auto& list = need[k];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    if (list.empty()) continue;
    for (std::size_t c = 0; c < dim; ++c) {
      const auto col = m.column(k, c);
      std::copy(col.begin(), col.end(), dense_t.begin() + static_cast<std::ptrdiff_t>(c * dim));
    }
    std::vector<std::uint32_t> rhs, out;
    for (std::size_t b0 = 0; b0 < list.size(); b0 += kBatch) {
      const std::size_t cnt = std::min(kBatch, list.size() - b0);
      rhs.resize(dim * cnt);
      out.resize(dim * cnt);
      for (std::size_t t = 0; t < cnt; ++t) {
        const auto& nf = m.border_nf_[list[b0 + t]];
        std::copy(nf.begin(), nf.end(), rhs.begin() + static_cast<std::ptrdiff_t>(t * dim));
      }
      kernels::matmul_mod(dense_t, rhs, out, dim, dim, cnt, q);
      for (std::size_t t = 0; t < cnt; ++t) {
        products[k].emplace(list[b0 + t],
                            std::vector<std::uint32_t>(out.begin() + static_cast<std::ptrdiff_t>(t * dim),
                                                       out.begin() + static_cast<std::ptrdiff_t>((t + 1) * dim)));
      }
    }
  }

  for (const auto& [i, j, s] : checks) {
    const auto xi = m.unit_column(i, s);
    const auto xj = m.unit_column(j, s);
    const std::vector<std::uint32_t> lhs =
        xj ? m.column(i, *xj) : products[i].at(border_of(j, s));
    const std::vector<std::uint32_t> rhs =
        xi ? m.column(j, *xi) : products[j].at(border_of(i, s));
    if (lhs != rhs) return false;
  }
  return true;
}

DensityReport density(const MultiplicationMatrices& m, int var) {
  DensityReport r;
  r.nnz = m.nonzeros(var);
  r.total = m.dim() * m.dim();
  r.density = r.total == 0 ? 0.0 : 100.0 * static_cast<double>(r.nnz) / static_cast<double>(r.total);
  return r;
}

DensityReport density(const MultiplicationMatrices& m) {
  DensityReport r;
  for (int j = 0; j < m.nvars(); ++j) r.nnz += m.nonzeros(j);
  r.total = m.dim() * m.dim() * static_cast<std::size_t>(m.nvars());
  r.density = r.total == 0 ? 0.0 : 100.0 * static_cast<double>(r.nnz) / static_cast<double>(r.total);
  return r;
}

}  // namespace critpoints
