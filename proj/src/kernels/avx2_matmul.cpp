// Dense modular product on top of Eigen's double GEMM. Built with the same
// flags as avx2.cpp so Eigen emits AVX2/FMA code; only reached through the
// dispatcher when avx2::supported().

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "critpoints/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)
#include <Eigen/Dense>
#define CRITPOINTS_HAVE_AVX2 1
#else
#define CRITPOINTS_HAVE_AVX2 0
#endif

namespace critpoints::kernels::avx2 {

void matmul_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                std::span<std::uint32_t> c, std::size_t rows, std::size_t inner, std::size_t cols,
                std::uint32_t q) {
#if CRITPOINTS_HAVE_AVX2
  if (a.size() != rows * inner || b.size() != inner * cols || c.size() != rows * cols) {
    throw std::invalid_argument("matmul_mod: dimension mismatch");
  }
  std::fill(c.begin(), c.end(), 0u);
  if (rows == 0 || cols == 0 || inner == 0) return;
  using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic>;
  using Idx = Eigen::Index;
  const double qm1 = static_cast<double>(q - 1);
  // Largest chunk with chunk * (q-1)^2 + (q-1) < 2^53.
  const double limit = 9007199254740992.0;
  // Large moduli do not fit even a single product exactly.
  if (qm1 * qm1 + qm1 >= limit) return scalar::matmul_mod(a, b, c, rows, inner, cols, q);
  std::size_t chunk = static_cast<std::size_t>((limit - qm1) / std::max(1.0, qm1 * qm1));
  chunk = std::clamp<std::size_t>(chunk, 1, inner);

  Eigen::Map<const Eigen::Matrix<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic>> ua(
      a.data(), static_cast<Idx>(rows), static_cast<Idx>(inner));
  Eigen::Map<const Eigen::Matrix<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic>> ub(
      b.data(), static_cast<Idx>(inner), static_cast<Idx>(cols));
  Mat acc = Mat::Zero(static_cast<Idx>(rows), static_cast<Idx>(cols));
  const double dq = static_cast<double>(q);
  const double inv_q = 1.0 / dq;
  // Exact for integers below 2^53: the estimated quotient is off by at most
  // one.
  auto reduce = [dq, inv_q](double v) {
    double r = v - std::floor(v * inv_q) * dq;
    if (r < 0) r += dq;
    if (r >= dq) r -= dq;
    return r;
  };
  for (std::size_t k0 = 0; k0 < inner; k0 += chunk) {
    const Idx kk = static_cast<Idx>(std::min(chunk, inner - k0));
    const Mat da = ua.middleCols(static_cast<Idx>(k0), kk).cast<double>();
    const Mat db = ub.middleRows(static_cast<Idx>(k0), kk).cast<double>();
    acc.noalias() += da * db;
    acc = acc.unaryExpr(reduce);
  }
  for (Idx j = 0; j < acc.cols(); ++j) {
    for (Idx i = 0; i < acc.rows(); ++i) {
      c[static_cast<std::size_t>(j) * rows + static_cast<std::size_t>(i)] =
          static_cast<std::uint32_t>(acc(i, j));
    }
  }
#else
  scalar::matmul_mod(a, b, c, rows, inner, cols, q);
#endif
}

}  // namespace critpoints::kernels::avx2
