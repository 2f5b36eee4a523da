#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace critpoints {

using BigInt = boost::multiprecision::cpp_int;

class InexactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer power series known exactly below `truncation()`. A series with
/// truncation kExact is a polynomial known in full.
class PowerSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();

  PowerSeries() = default;
  explicit PowerSeries(std::vector<BigInt> coeffs, int truncation = kExact);

  static PowerSeries monomial(int degree, BigInt coeff = 1);
  /// (1 - t^k)^e as an exact polynomial.
  static PowerSeries one_minus_power(int k, int e = 1);

  int truncation() const { return truncation_; }
  bool is_exact() const { return truncation_ == kExact; }
  /// Coefficient of t^d; throws std::out_of_range at or past the truncation.
  BigInt coeff(int d) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Highest nonzero coefficient index, -1 for zero. For truncated series this
  /// only sees the known prefix.
  int degree() const;
  /// Sum of the known coefficients, i.e. the value at t = 1 for polynomials.
  BigInt value_at_one() const;
  /// True when every known coefficient past degree() is zero and at least
  /// `margin` such coefficients are known.
  bool vanishes_beyond_degree(int margin = 1) const;
  bool nonnegative() const;

  PowerSeries truncated(int t) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

  /// Exact polynomial division when both operands are exact (throws on a
  /// nonzero remainder); otherwise power-series division through the common
  /// truncation, throwing if an integer step is inexact.
  friend PowerSeries divide_exact(const PowerSeries& a, const PowerSeries& b);

  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

  std::string to_string() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
  int truncation_ = kExact;
};

/// Power-series division a / b kept up to `truncation`, for infinite quotients
/// such as 1 / (1 - t)^n.
PowerSeries series_divide(const PowerSeries& a, const PowerSeries& b, int truncation);

BigInt binomial(int n, int k);

}  // namespace critpoints
