#pragma once

#include <cstdint>
#include <vector>

#include "critpoints/polynomial.hpp"

namespace critpoints {

struct SystemMeta {
  int p = 0;
  int degree = 0;
  std::uint64_t seed = 0;
  bool homogeneous = false;
};

/// Generator list of an ideal together with how it was produced.
struct PolySystem {
  Ring ring;
  std::vector<Polynomial> generators;
  SystemMeta meta;

  int nvars() const { return ring.nvars; }
};

/// Dense rows x cols grid of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(const Ring& ring, int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Ring& ring() const { return ring_; }

  const Polynomial& at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  Polynomial& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }

 private:
  Ring ring_;
  int rows_;
  int cols_;
  std::vector<Polynomial> entries_;
};

/// p dense polynomials of degree exactly D with i.i.d. uniform coefficients.
///
/// Coefficients are drawn from SplitMix64(seed): polynomial by polynomial, and
/// within one polynomial over monomials of degree D, D-1, ..., 0 (only D when
/// homogeneous), each degree block in decreasing grevlex order. A polynomial
/// whose degree-D part comes out zero is redrawn from the continuing stream.
PolySystem gen_random_system(const PrimeField& field, int n, int p, int degree, std::uint64_t seed,
                             bool homogeneous);

/// p x (n - drop) matrix of partial derivatives with respect to x_{drop+1}..x_n.
PolyMatrix truncated_jacobian(const PolySystem& system, int drop);

/// All p x p minors of a p x m matrix (p <= m), column subsets in
/// lexicographic order, columns taken increasing.
std::vector<Polynomial> maximal_minors(const PolyMatrix& matrix);

/// F followed by the maximal minors of jac(F, 1). The square case p == n
/// leaves a p x (n-1) Jacobian and is rejected.
PolySystem build_critical_system(const PolySystem& system);

/// Degree-D homogeneous parts of the generators.
PolySystem top_components(const PolySystem& system);

/// Maximal minors of the p x m matrix of distinct variables u_{i,j}, stored
/// as x_{i*m + j + 1} in a ring of p*m variables.
PolySystem variable_matrix_minors(const PrimeField& field, int p, int m);

}  // namespace critpoints
