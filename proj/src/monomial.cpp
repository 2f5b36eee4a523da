#include "critpoints/monomial.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace critpoints {

std::string_view order_name(MonomialOrder order) {
  return order == MonomialOrder::kGrevlex ? "grevlex" : "lex";
}

Monomial::Monomial(int nvars) {
  if (nvars < 0 || nvars > kMaxVariables) {
    throw std::invalid_argument("variable count must be in [0, " +
                                std::to_string(kMaxVariables) + "]");
  }
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(int nvars, std::span<const int> exponents) : Monomial(nvars) {
  if (static_cast<int>(exponents.size()) != nvars) {
    throw std::invalid_argument("exponent vector length differs from variable count");
  }
  int deg = 0;
  for (int i = 0; i < nvars; ++i) {
    if (exponents[i] < 0 || exponents[i] > kMaxExponent) {
      throw std::invalid_argument("exponent out of range [0, " + std::to_string(kMaxExponent) + "]");
    }
    exp_[i] = static_cast<std::uint16_t>(exponents[i]);
    deg += exponents[i];
  }
  degree_ = static_cast<std::uint32_t>(deg);
}

Monomial Monomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
  Monomial m(nvars);
  m.exp_[index] = 1;
  m.degree_ = 1;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  bool overflow = false;
  for (int i = 0; i < nvars_; ++i) {
    unsigned s = unsigned{exp_[i]} + other.exp_[i];
    overflow |= s > kMaxExponent;
    r.exp_[i] = static_cast<std::uint16_t>(s);
  }
  if (overflow) throw std::overflow_error("monomial exponent exceeds " + std::to_string(kMaxExponent));
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (int i = 0; i < nvars_; ++i) r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - other.exp_[i]);
  r.degree_ = degree_ - other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (int i = 0; i < nvars_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 0; i < nvars_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  int deg = 0;
  for (int i = 0; i < nvars_; ++i) {
    r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    deg += r.exp_[i];
  }
  r.degree_ = static_cast<std::uint32_t>(deg);
  return r;
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t mask = 0;
  for (int i = 0; i < nvars_; ++i) {
    if (exp_[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::uint64_t Monomial::hash() const {
  static_assert(kMaxVariables % 4 == 0);
  std::uint64_t words[kMaxVariables / 4];
  std::memcpy(words, exp_.data(), sizeof(words));
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ nvars_;
  for (std::uint64_t w : words) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
  }
  return h ^ (h >> 31);
}

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 0; i < nvars_; ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exp_[i] > 1) out += '^' + std::to_string(exp_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("cannot compare monomials in different variable counts");
  }
  const int n = a.nvars();
  if (order == MonomialOrder::kLex) {
    for (int i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int i = n - 1; i >= 0; --i) {
    // Smaller exponent on the last differing variable wins.
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace critpoints

namespace critpoints {

namespace {

void enumerate(int nvars, int var, int remaining, std::vector<int>& exps,
               std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    exps[var] = remaining;
    out.emplace_back(nvars, exps);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[var] = e;
    enumerate(nvars, var + 1, remaining - e, exps, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree, MonomialOrder order) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> exps(nvars, 0);
  enumerate(nvars, 0, degree, exps, out);
  std::sort(out.begin(), out.end(), DescendingIn{order});
  return out;
}

}  // namespace critpoints
