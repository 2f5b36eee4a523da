#pragma once

// Closed-form Hilbert series, degree of regularity, degree and complexity
// estimates for critical-point ideals of generic unmixed systems
// (p polynomials of degree D in n variables), computed with exact integers.

#include <cstdint>
#include <optional>
#include <vector>

#include "critpoints/series.hpp"

namespace critpoints {

/// Square grid of exact polynomial series.
class SeriesMatrix {
 public:
  explicit SeriesMatrix(int size) : size_(size), entries_(static_cast<std::size_t>(size) * size) {}

  int size() const { return size_; }
  const PowerSeries& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * size_ + j]; }
  PowerSeries& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * size_ + j]; }

 private:
  int size_;
  std::vector<PowerSeries> entries_;
};

/// (p-1) x (p-1) matrix with 1-based entry (i, j) equal to
/// sum_k C(p-i, k) C(n-1-j, k) t^(e k). Empty for p = 1.
SeriesMatrix matrix_A(int n, int p, int substitute_degree = 1);

/// Cofactor expansion up to size 6, fraction-free Bareiss elimination above.
/// The empty matrix has determinant 1.
PowerSeries det_series(const SeriesMatrix& m);

/// Default truncation: dreg_formula(n, p, D) + 8.
int default_truncation(int n, int p, int degree);

/// Hilbert series of the homogeneous critical-point ideal of a generic
/// system; a polynomial, kept to `truncation` coefficients (all past its
/// degree are zero). Throws InexactDivision if the quotient is not a
/// polynomial.
PowerSeries hs_unmixed(int n, int p, int degree, int truncation);

/// Hilbert series of the ideal of maximal minors of a generic p x m matrix of
/// indeterminates, truncated.
PowerSeries hs_determinantal(int p, int m, int truncation);

/// D(p-1) + (D-2) n + 2.
std::int64_t dreg_formula(std::int64_t n, std::int64_t p, std::int64_t degree);

/// C(n-1, p-1) D^p (D-1)^(n-p).
BigInt deg_formula(int n, int p, int degree);

/// det A(1), computed by integer Bareiss elimination.
BigInt det_A_at_one(int n, int p);

struct ComplexityBound {
  /// log10 of C(D(p-1)+(D-1)n+2, dreg)^omega and of n C(n-1,p-1)^3 D^(3p) (D-1)^(3(n-p)).
  double log10_grevlex = 0;
  double log10_fglm = 0;
  /// Exact C(D(p-1)+(D-1)n+2, dreg) and FGLM summand when they stay below
  /// kExactBitLimit bits.
  std::optional<BigInt> grevlex_binomial;
  std::optional<BigInt> fglm_exact;

  static constexpr unsigned kExactBitLimit = 4096;
};

ComplexityBound complexity_bound(int n, int p, int degree, double omega);

/// log C(n + dreg, n) / log DEG, via log-gamma.
double complexity_ratio(std::int64_t n, std::int64_t p, std::int64_t degree);

/// Natural logarithm of C(n, k) via log-gamma.
double log_binomial(double n, double k);

}  // namespace critpoints
