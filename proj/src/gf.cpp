#include "critpoints/gf.hpp"

#include <string>

namespace critpoints {

bool is_prime(std::uint32_t q) {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= q; d += 2) {
    if (q % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q < 3 || q >= (1u << 31) || !is_prime(q)) {
    throw std::invalid_argument("field modulus must be an odd prime below 2^31, got " +
                                std::to_string(q));
  }
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.value == 0) throw DivisionByZero();
  // Extended Euclid on (a, q); q is prime so gcd is 1.
  std::int64_t r0 = q_, r1 = a.value, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    std::int64_t r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - quot * t1;
    t0 = t1;
    t1 = t2;
  }
  return from_int(t0);
}

FieldElement PrimeField::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  while (e != 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

}  // namespace critpoints
