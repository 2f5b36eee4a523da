#include <algorithm>
#include <stdexcept>
#include <vector>
#include <cstddef>
#include <limits>

#include "critpoints/kernels.hpp"

namespace critpoints::kernels::scalar {

void axpy_mod(std::span<std::uint32_t> y, std::uint32_t c, std::span<const std::uint32_t> x,
              std::uint32_t q) {
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = static_cast<std::uint32_t>((y[i] + cc * x[i]) % q);
  }
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t q) {
  const std::uint64_t cc = c;
  for (auto& v : y) v = static_cast<std::uint32_t>(cc * v % q);
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t q) {
  // Products are below (q-1)^2; fold the accumulator before it can overflow.
  const std::uint64_t qm1 = q - 1;
  const std::uint64_t budget = qm1 == 0 ? 1 : std::numeric_limits<std::uint64_t>::max() / (qm1 * qm1);
  std::uint64_t acc = 0;
  std::uint64_t pending = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (pending + 1 >= budget) {
      acc %= q;
      pending = 1;
    }
    acc += static_cast<std::uint64_t>(a[i]) * b[i];
    ++pending;
  }
  return static_cast<std::uint32_t>(acc % q);
}

void matmul_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                std::span<std::uint32_t> c, std::size_t rows, std::size_t inner, std::size_t cols,
                std::uint32_t q) {
  if (a.size() != rows * inner || b.size() != inner * cols || c.size() != rows * cols) {
    throw std::invalid_argument("matmul_mod: dimension mismatch");
  }
  std::vector<std::uint32_t> col(rows);
  for (std::size_t j = 0; j < cols; ++j) {
    std::fill(col.begin(), col.end(), 0u);
    for (std::size_t k = 0; k < inner; ++k) {
      const std::uint32_t bkj = b[j * inner + k];
      if (bkj != 0) axpy_mod(col, bkj, a.subspan(k * rows, rows), q);
    }
    std::copy(col.begin(), col.end(), c.begin() + static_cast<std::ptrdiff_t>(j * rows));
  }
}

}  // namespace critpoints::kernels::scalar
