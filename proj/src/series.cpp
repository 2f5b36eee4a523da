#include "critpoints/series.hpp"

#include <algorithm>

namespace critpoints {

PowerSeries::PowerSeries(std::vector<BigInt> coeffs, int truncation)
    : coeffs_(std::move(coeffs)), truncation_(truncation) {
  if (truncation < 0) throw std::invalid_argument("negative truncation");
  if (static_cast<long long>(coeffs_.size()) > truncation_) coeffs_.resize(truncation_);
  trim();
}

void PowerSeries::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PowerSeries PowerSeries::monomial(int degree, BigInt coeff) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coeff);
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::one_minus_power(int k, int e) {
  std::vector<BigInt> c(static_cast<std::size_t>(k) * e + 1);
  for (int i = 0; i <= e; ++i) {
    BigInt b = binomial(e, i);
    c[static_cast<std::size_t>(i) * k] = (i % 2 == 0) ? b : BigInt(-b);
  }
  return PowerSeries(std::move(c));
}

BigInt PowerSeries::coeff(int d) const {
  if (d < 0 || d >= truncation_) throw std::out_of_range("coefficient past series truncation");
  return d < static_cast<int>(coeffs_.size()) ? coeffs_[d] : BigInt(0);
}

int PowerSeries::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

BigInt PowerSeries::value_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool PowerSeries::vanishes_beyond_degree(int margin) const {
  // coeffs_ is trimmed, so everything known past degree() is zero.
  return is_exact() || static_cast<long long>(degree()) + 1 + margin <= truncation_;
}

bool PowerSeries::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

PowerSeries PowerSeries::truncated(int t) const {
  return PowerSeries(coeffs_, std::min(t, truncation_));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return PowerSeries(std::move(c), std::min(a.truncation_, b.truncation_));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return PowerSeries(std::move(c), std::min(a.truncation_, b.truncation_));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  // A truncated factor with a nonzero low coefficient limits the product to
  // that factor's truncation shifted by the other's valuation; keeping the
  // minimum is the conservative choice.
  const int trunc = std::min(a.truncation_, b.truncation_);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return PowerSeries({}, trunc);
  std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (trunc != PowerSeries::kExact) len = std::min<std::size_t>(len, trunc);
  std::vector<BigInt> c(len);
  for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return PowerSeries(std::move(c), trunc);
}

namespace {

int valuation(const std::vector<BigInt>& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

PowerSeries series_divide(const PowerSeries& a, const PowerSeries& b, int truncation) {
  const auto& bc = b.coeffs();
  int vb = valuation(bc);
  if (vb < 0) throw InexactDivision("division by the zero series");
  const auto& ac = a.coeffs();
  for (int i = 0; i < vb && i < static_cast<int>(ac.size()); ++i) {
    if (ac[i] != 0) throw InexactDivision("dividend valuation below divisor valuation");
  }
  // Shift both down by vb; the quotient is known up to min(ta, tb) - vb.
  long long limit = std::min<long long>({static_cast<long long>(a.truncation()),
                                         static_cast<long long>(b.truncation()),
                                         static_cast<long long>(truncation) + vb});
  int out_len = static_cast<int>(limit - vb);
  if (out_len < 0) out_len = 0;
  const BigInt& lead = bc[vb];
  std::vector<BigInt> q(out_len);
  for (int k = 0; k < out_len; ++k) {
    BigInt acc = (k + vb < static_cast<int>(ac.size())) ? ac[k + vb] : BigInt(0);
    for (int i = 1; i <= k && vb + i < static_cast<int>(bc.size()); ++i) {
      if (bc[vb + i] != 0 && q[k - i] != 0) acc -= bc[vb + i] * q[k - i];
    }
    if (acc % lead != 0) throw InexactDivision("non-integral power-series quotient");
    q[k] = acc / lead;
  }
  return PowerSeries(std::move(q), out_len);
}

PowerSeries divide_exact(const PowerSeries& a, const PowerSeries& b) {
  if (!a.is_exact() || !b.is_exact()) {
    return series_divide(a, b, std::min(a.truncation(), b.truncation()));
  }
  const auto& bc = b.coeffs_;
  if (bc.empty()) throw InexactDivision("division by the zero polynomial");
  std::vector<BigInt> rem = a.coeffs_;
  const int db = static_cast<int>(bc.size()) - 1;
  const int da = static_cast<int>(rem.size()) - 1;
  if (da < db) {
    if (da >= 0) throw InexactDivision("nonzero remainder in polynomial division");
    return PowerSeries();
  }
  std::vector<BigInt> q(da - db + 1);
  for (int k = da - db; k >= 0; --k) {
    const BigInt& top = rem[k + db];
    if (top == 0) continue;
    if (top % bc[db] != 0) throw InexactDivision("non-integral polynomial quotient");
    q[k] = top / bc[db];
    for (int i = 0; i <= db; ++i) rem[k + i] -= q[k] * bc[i];
  }
  for (const auto& r : rem) {
    if (r != 0) throw InexactDivision("nonzero remainder in polynomial division");
  }
  return PowerSeries(std::move(q));
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  return a.truncation_ == b.truncation_ && a.coeffs_ == b.coeffs_;
}

std::string PowerSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += coeffs_[i] < 0 ? " - " : " + ";
    else if (coeffs_[i] < 0) out += "-";
    BigInt mag = coeffs_[i] < 0 ? BigInt(-coeffs_[i]) : coeffs_[i];
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += (i == 0 || mag != 1) ? "*t" : "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  if (!is_exact()) out += " + O(t^" + std::to_string(truncation_) + ")";
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace critpoints
