#include "critpoints/critsys.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "critpoints/rng.hpp"

namespace critpoints {

PolyMatrix::PolyMatrix(const Ring& ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, Polynomial(ring)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

PolySystem gen_random_system(const PrimeField& field, int n, int p, int degree, std::uint64_t seed,
                             bool homogeneous) {
  if (n < 1 || p < 1 || p > n) {
    throw std::invalid_argument("need 1 <= p <= n, got n=" + std::to_string(n) +
                                " p=" + std::to_string(p));
  }
  if (degree < 2) throw std::invalid_argument("degree must be at least 2");
  Ring ring(field, n);
  std::vector<std::vector<Monomial>> blocks;
  for (int d = degree; d >= (homogeneous ? degree : 0); --d) {
    blocks.push_back(monomials_of_degree(n, d));
  }
  SplitMix64 rng(seed);
  PolySystem sys{ring, {}, {p, degree, seed, homogeneous}};
  for (int k = 0; k < p; ++k) {
    while (true) {
      std::vector<Term> terms;
      bool top_nonzero = false;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (const auto& m : blocks[b]) {
          FieldElement c{static_cast<std::uint32_t>(rng.uniform(field.modulus()))};
          if (c.value == 0) continue;
          if (b == 0) top_nonzero = true;
          terms.push_back({m, c});
        }
      }
      if (!top_nonzero) continue;
      sys.generators.push_back(Polynomial::from_terms(ring, std::move(terms)));
      break;
    }
  }
  return sys;
}

PolyMatrix truncated_jacobian(const PolySystem& system, int drop) {
  const int n = system.nvars();
  if (drop < 0 || drop >= n) throw std::invalid_argument("truncation index must be in [0, n)");
  const int p = static_cast<int>(system.generators.size());
  PolyMatrix jac(system.ring, p, n - drop);
  for (int k = 0; k < p; ++k) {
    for (int j = 0; j < n - drop; ++j) {
      jac.at(k, j) = partial_derivative(system.generators[k], drop + j);
    }
  }
  return jac;
}

std::vector<Polynomial> maximal_minors(const PolyMatrix& matrix) {
  const int p = matrix.rows();
  const int m = matrix.cols();
  if (p > m) {
    throw std::invalid_argument("maximal minors need rows <= cols, got " + std::to_string(p) + "x" +
                                std::to_string(m));
  }
  if (m > 64) throw std::invalid_argument("at most 64 columns supported");
  const Ring& ring = matrix.ring();
  if (p == 0) return {Polynomial::constant(ring, FieldElement{1})};

  // minors[S] holds the determinant of rows 0..k-1 against the column set S
  // (bitmask, |S| = k); level k is built from level k-1 by expanding along
  // row k-1.
  std::unordered_map<std::uint64_t, Polynomial> prev;
  for (int c = 0; c < m; ++c) prev.emplace(std::uint64_t{1} << c, matrix.at(0, c));
  for (int k = 2; k <= p; ++k) {
    std::unordered_map<std::uint64_t, Polynomial> next;
    for (const auto& [sub, _] : prev) {
      for (int c = 0; c < m; ++c) {
        std::uint64_t set = sub | (std::uint64_t{1} << c);
        if (set == sub || next.count(set)) continue;
        Polynomial det(ring);
        int t = 0;
        for (int col = 0; col < m; ++col) {
          if (!(set & (std::uint64_t{1} << col))) continue;
          const Polynomial& a = matrix.at(k - 1, col);
          if (!a.is_zero()) {
            Polynomial term = a * prev.at(set & ~(std::uint64_t{1} << col));
            det = ((k - 1 + t) % 2 == 0) ? det + term : det - term;
          }
          ++t;
        }
        next.emplace(set, std::move(det));
      }
    }
    prev = std::move(next);
  }

  std::vector<Polynomial> out;
  std::vector<int> idx(p);
  for (int i = 0; i < p; ++i) idx[i] = i;
  while (true) {
    std::uint64_t set = 0;
    for (int c : idx) set |= std::uint64_t{1} << c;
    out.push_back(prev.at(set));
    int i = p - 1;
    while (i >= 0 && idx[i] == m - p + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

PolySystem build_critical_system(const PolySystem& system) {
  PolySystem out = system;
  for (auto& minor : maximal_minors(truncated_jacobian(system, 1))) {
    out.generators.push_back(std::move(minor));
  }
  return out;
}

PolySystem top_components(const PolySystem& system) {
  PolySystem out{system.ring, {}, system.meta};
  for (const auto& f : system.generators) {
    if (f.is_zero()) throw std::invalid_argument("top_components of a zero generator");
    out.generators.push_back(f.homogeneous_component(f.total_degree()));
  }
  out.meta.homogeneous = true;
  return out;
}

PolySystem variable_matrix_minors(const PrimeField& field, int p, int m) {
  if (p < 1 || p > m) throw std::invalid_argument("need 1 <= p <= m");
  Ring ring(field, p * m);
  PolyMatrix u(ring, p, m);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < m; ++j) u.at(i, j) = Polynomial::variable(ring, i * m + j);
  }
  PolySystem out{ring, maximal_minors(u), {p, p, 0, true}};
  return out;
}

}  // namespace critpoints
