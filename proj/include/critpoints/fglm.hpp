#pragma once

// Linear algebra in the quotient algebra K[X]/I of a zero-dimensional ideal:
// multiplication matrices over the grevlex staircase, their density, FGLM
// conversion to a lex basis, and recovery of GF(q)-rational solutions.

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "critpoints/critsys.hpp"
#include "critpoints/groebner.hpp"

namespace critpoints {

/// Matrices T_1..T_n of multiplication by each variable on K[X]/I, in the
/// basis given by the staircase of a reduced zero-dimensional basis. Column s
/// of T_j holds the coordinates of NF(x_j * s).
///
/// A column is either a unit vector (x_j * s is itself standard) or a shared
/// dense normal form of a border monomial.
class MultiplicationMatrices {
 public:
  MultiplicationMatrices() = default;

  std::size_t dim() const { return staircase_.size(); }
  int nvars() const { return static_cast<int>(columns_.size()); }
  std::uint32_t modulus() const { return q_; }
  const std::vector<Monomial>& staircase() const { return staircase_; }
  const std::vector<Monomial>& border() const { return border_; }

  /// Entry (row, col) of T_var.
  std::uint32_t entry(int var, std::size_t row, std::size_t col) const;
  /// Dense copy of column `col` of T_var.
  std::vector<std::uint32_t> column(int var, std::size_t col) const;
  /// out <- T_var * v.
  void apply(int var, std::span<const std::uint32_t> v, std::span<std::uint32_t> out) const;
  /// Index of `m` in the staircase, if standard.
  std::optional<std::size_t> index_of(const Monomial& m) const;
  /// Staircase index of x_var * s when that product is standard (a unit
  /// column), nullopt when it lies on the border.
  std::optional<std::size_t> unit_column(int var, std::size_t col) const {
    const std::int64_t c = columns_.at(var).at(col);
    if (c < 0) return std::nullopt;
    return static_cast<std::size_t>(c);
  }
  /// Coordinates of the normal form of a border monomial.
  std::span<const std::uint32_t> border_normal_form(std::size_t border_index) const {
    return border_nf_[border_index];
  }
  /// Nonzero entries of T_var.
  std::size_t nonzeros(int var) const;

 private:
  friend MultiplicationMatrices multiplication_matrices(const GroebnerBasis& basis);
  friend bool matrices_commute(const MultiplicationMatrices& m);

  std::uint32_t q_ = 0;
  std::vector<Monomial> staircase_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> standard_;
  std::vector<Monomial> border_;
  std::vector<std::vector<std::uint32_t>> border_nf_;
  std::vector<std::size_t> border_nnz_;
  // Variable k with NF(b) built as T_k NF(b / x_k); -1 for leading monomials.
  std::vector<int> border_route_;
  // columns_[var][s] >= 0: unit column at that staircase index;
  // < 0: border normal form number -(value + 1).
  std::vector<std::vector<std::int64_t>> columns_;
};

/// Requires a reduced, zero-dimensional basis for a degree order (throws
/// NotZeroDimensional otherwise).
MultiplicationMatrices multiplication_matrices(const GroebnerBasis& basis);

/// T_i T_j == T_j T_i for all i, j. Only columns s where x_i s or x_j s leaves
/// the staircase can differ, so only those are compared.
bool matrices_commute(const MultiplicationMatrices& m);

struct DensityReport {
  std::size_t nnz = 0;
  std::size_t total = 0;
  /// Percentage in [0, 100].
  double density = 0;
};

/// Nonzero proportion across all of T_1..T_n.
DensityReport density(const MultiplicationMatrices& m);
/// Nonzero proportion of a single T_var.
DensityReport density(const MultiplicationMatrices& m, int var);

/// Reduced lex basis of the same ideal (x1 > x2 > ... > xn), by the classic
/// dense FGLM walk over monomials in increasing lex order.
GroebnerBasis fglm_lex(const GroebnerBasis& basis, const MultiplicationMatrices& m);

/// Lex basis {x_1 - g_1(x_n), ..., x_{n-1} - g_{n-1}(x_n), h(x_n)}.
bool is_shape_position(const GroebnerBasis& lex);

struct SolutionSample {
  bool shape_position = false;
  std::vector<std::vector<FieldElement>> points;
};

/// All GF(q)-rational points of a zero-dimensional lex basis. Roots of the
/// x_n eliminant come from evaluating it at every field element; each partial
/// point is then extended through the gcd of the basis elements whose main
/// variable is next, specialised at that point. shape_position reports
/// is_shape_position(lex) and does not restrict the search.
SolutionSample sample_solutions(const GroebnerBasis& lex);

/// For each point, whether the evaluated p x (n-1) matrix jac(F, 1) has rank
/// below p.
std::vector<bool> verify_rank_deficiency(const PolySystem& system,
                                         std::span<const std::vector<FieldElement>> points);

/// Rank of jac(F, 1) evaluated at `point`.
int truncated_jacobian_rank(const PolySystem& system, std::span<const FieldElement> point);

/// A GF(q)-point of V(F) obtained by fixing x_{p+1}..x_n at random values and
/// solving for x_1..x_p; tries up to `attempts` random fibres.
std::optional<std::vector<FieldElement>> sample_variety_point(const PolySystem& system,
                                                              std::uint64_t seed, int attempts = 16);

}  // namespace critpoints
