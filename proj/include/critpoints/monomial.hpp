#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace critpoints {

inline constexpr int kMaxVariables = 40;
inline constexpr int kMaxExponent = 65535;

enum class MonomialOrder { kGrevlex, kLex };

std::string_view order_name(MonomialOrder order);

/// Power product x1^a1 ... xn^an with small fixed-width exponents and a cached
/// total degree. Variable x1 is index 0.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in `nvars` variables.
  explicit Monomial(int nvars);
  Monomial(int nvars, std::span<const int> exponents);

  static Monomial variable(int nvars, int index);

  int nvars() const { return nvars_; }
  int degree() const { return static_cast<int>(degree_); }
  int operator[](int i) const { return exp_[i]; }
  bool is_one() const { return degree_ == 0; }

  /// Throws std::overflow_error if an exponent would exceed kMaxExponent.
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  /// Bit i set iff x_{i+1} occurs; a cheap divisibility prefilter.
  std::uint64_t support_mask() const;

  std::uint64_t hash() const;

  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return static_cast<std::size_t>(m.hash()); }
};

/// Three-way comparison under `order`; greater means larger in the order.
/// Throws std::invalid_argument on mismatched variable counts.
std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order);

/// Comparator sorting monomials in decreasing order.
struct DescendingIn {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b, order) > 0; }
};

}  // namespace critpoints

namespace critpoints {

/// All monomials of total degree exactly `degree` in `nvars` variables,
/// sorted decreasing in `order`.
std::vector<Monomial> monomials_of_degree(int nvars, int degree,
                                          MonomialOrder order = MonomialOrder::kGrevlex);

}  // namespace critpoints
