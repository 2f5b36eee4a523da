#include "critpoints/hilbert.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace critpoints {

namespace {

void check_shape(int n, int p, int degree) {
  if (p < 1 || p > n) {
    throw std::invalid_argument("need 1 <= p <= n, got n=" + std::to_string(n) +
                                " p=" + std::to_string(p));
  }
  if (degree < 2) throw std::invalid_argument("degree must be at least 2");
}

PowerSeries cofactor_det(const SeriesMatrix& m, std::vector<int>& rows_left, int col) {
  if (col == m.size()) return PowerSeries({BigInt(1)});
  PowerSeries det;
  for (std::size_t r = 0; r < rows_left.size(); ++r) {
    int row = rows_left[r];
    if (m.at(row, col).coeffs().empty()) continue;
    rows_left.erase(rows_left.begin() + static_cast<long>(r));
    PowerSeries minor = cofactor_det(m, rows_left, col + 1);
    rows_left.insert(rows_left.begin() + static_cast<long>(r), row);
    PowerSeries term = m.at(row, col) * minor;
    det = (r % 2 == 0) ? det + term : det - term;
  }
  return det;
}

PowerSeries bareiss_det(SeriesMatrix a) {
  const int n = a.size();
  int sign = 1;
  PowerSeries prev({BigInt(1)});
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k).coeffs().empty()) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!a.at(r, k).coeffs().empty()) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return PowerSeries();
      for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(swap, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a.at(i, j) = divide_exact(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
      }
    }
    prev = a.at(k, k);
  }
  PowerSeries d = a.at(n - 1, n - 1);
  return sign > 0 ? d : PowerSeries() - d;
}

}  // namespace

SeriesMatrix matrix_A(int n, int p, int substitute_degree) {
  if (p < 1 || p > n) throw std::invalid_argument("need 1 <= p <= n");
  if (substitute_degree < 1) throw std::invalid_argument("substitute degree must be >= 1");
  const int size = p - 1;
  SeriesMatrix a(size);
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      const int kmax = std::min(p - i, n - 1 - j);
      std::vector<BigInt> c(static_cast<std::size_t>(std::max(kmax, 0)) * substitute_degree + 1);
      for (int k = 0; k <= kmax; ++k) {
        c[static_cast<std::size_t>(k) * substitute_degree] = binomial(p - i, k) * binomial(n - 1 - j, k);
      }
      a.at(i - 1, j - 1) = PowerSeries(std::move(c));
    }
  }
  return a;
}

PowerSeries det_series(const SeriesMatrix& m) {
  if (m.size() == 0) return PowerSeries({BigInt(1)});
  if (m.size() <= 6) {
    std::vector<int> rows(m.size());
    for (int i = 0; i < m.size(); ++i) rows[i] = i;
    return cofactor_det(m, rows, 0);
  }
  return bareiss_det(m);
}

int default_truncation(int n, int p, int degree) {
  return static_cast<int>(dreg_formula(n, p, degree)) + 8;
}

PowerSeries hs_unmixed(int n, int p, int degree, int truncation) {
  check_shape(n, p, degree);
  const int e = degree - 1;
  PowerSeries det = det_series(matrix_A(n, p, e));
  const int shift = e * static_cast<int>(binomial(p - 1, 2));
  PowerSeries numer = divide_exact(det, PowerSeries::monomial(shift));
  numer = numer * PowerSeries::one_minus_power(degree, p) * PowerSeries::one_minus_power(e, n - p);
  PowerSeries hs = divide_exact(numer, PowerSeries::one_minus_power(1, n));
  return hs.truncated(truncation);
}

PowerSeries hs_determinantal(int p, int m, int truncation) {
  if (p < 1 || p > m) throw std::invalid_argument("need 1 <= p <= m");
  PowerSeries det = det_series(matrix_A(m + 1, p, 1));
  PowerSeries numer = divide_exact(det, PowerSeries::monomial(static_cast<int>(binomial(p - 1, 2))));
  return series_divide(numer, PowerSeries::one_minus_power(1, (m + 1) * (p - 1)), truncation);
}

std::int64_t dreg_formula(std::int64_t n, std::int64_t p, std::int64_t degree) {
  return degree * (p - 1) + (degree - 2) * n + 2;
}

BigInt deg_formula(int n, int p, int degree) {
  check_shape(n, p, degree);
  BigInt r = binomial(n - 1, p - 1);
  r *= boost::multiprecision::pow(BigInt(degree), static_cast<unsigned>(p));
  r *= boost::multiprecision::pow(BigInt(degree - 1), static_cast<unsigned>(n - p));
  return r;
}

BigInt det_A_at_one(int n, int p) {
  if (p < 1 || p > n) throw std::invalid_argument("need 1 <= p <= n");
  const int size = p - 1;
  if (size == 0) return 1;
  std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size));
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      BigInt s = 0;
      for (int k = 0; k <= std::min(p - i, n - 1 - j); ++k) s += binomial(p - i, k) * binomial(n - 1 - j, k);
      a[i - 1][j - 1] = s;
    }
  }
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < size; ++r) {
        if (a[r][k] != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

ComplexityBound complexity_bound(int n, int p, int degree, double omega) {
  check_shape(n, p, degree);
  if (omega < 2 || omega > 3) throw std::invalid_argument("omega must lie in [2, 3]");
  const double ln10 = std::log(10.0);
  const std::int64_t dreg = dreg_formula(n, p, degree);
  const std::int64_t top = static_cast<std::int64_t>(degree) * (p - 1) +
                           static_cast<std::int64_t>(degree - 1) * n + 2;
  ComplexityBound out;
  out.log10_grevlex = omega * log_binomial(static_cast<double>(top), static_cast<double>(dreg)) / ln10;
  const double log_deg = log_binomial(n - 1, p - 1) + p * std::log(degree) + (n - p) * std::log(degree - 1);
  out.log10_fglm = (std::log(n) + 3 * log_deg) / ln10;

  const double bits_binom = out.log10_grevlex / omega * std::log2(10.0);
  if (bits_binom < ComplexityBound::kExactBitLimit) {
    out.grevlex_binomial = binomial(static_cast<int>(top), static_cast<int>(dreg));
  }
  if (out.log10_fglm * std::log2(10.0) < ComplexityBound::kExactBitLimit) {
    BigInt d = deg_formula(n, p, degree);
    out.fglm_exact = BigInt(n) * d * d * d;
  }
  return out;
}

double complexity_ratio(std::int64_t n, std::int64_t p, std::int64_t degree) {
  if (p < 1 || p > n) throw std::invalid_argument("need 1 <= p <= n");
  if (degree < 2) throw std::invalid_argument("degree must be at least 2");
  const double dreg = static_cast<double>(dreg_formula(n, p, degree));
  const double num = log_binomial(static_cast<double>(n) + dreg, static_cast<double>(n));
  const double log_deg = log_binomial(static_cast<double>(n - 1), static_cast<double>(p - 1)) +
                         static_cast<double>(p) * std::log(static_cast<double>(degree)) +
                         static_cast<double>(n - p) * std::log(static_cast<double>(degree - 1));
  return num / log_deg;
}

}  // namespace critpoints
