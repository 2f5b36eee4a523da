#pragma once

#include <cstdint>
#include <stdexcept>

namespace critpoints {

/// Element of GF(q); the modulus lives in the PrimeField that produced it.
struct FieldElement {
  std::uint32_t value = 0;

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("inverse of zero in GF(q)") {}
};

/// Prime field GF(q) for an odd prime q < 2^31. Immutable once built.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultModulus = 65521;

  /// Throws std::invalid_argument unless q is an odd prime below 2^31.
  explicit PrimeField(std::uint32_t q = kDefaultModulus);

  std::uint32_t modulus() const { return q_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }

  /// Reduces an arbitrary signed integer into [0, q).
  FieldElement from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    return {static_cast<std::uint32_t>(r)};
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    std::uint32_t s = a.value + b.value;
    return {s >= q_ ? s - q_ : s};
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return {a.value >= b.value ? a.value - b.value : a.value + q_ - b.value};
  }
  FieldElement neg(FieldElement a) const { return {a.value == 0 ? 0 : q_ - a.value}; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % q_)};
  }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.q_ == b.q_; }

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint32_t q);

}  // namespace critpoints
