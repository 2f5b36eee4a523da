#include <atomic>
#include <stdexcept>

#include "critpoints/kernels.hpp"

namespace critpoints::kernels {

namespace {

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

Isa detected_isa() { return avx2::supported() ? Isa::kAvx2 : Isa::kScalar; }

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::kAvx2 && !avx2::supported()) {
    throw std::invalid_argument("AVX2 kernels are not available on this CPU");
  }
  active().store(isa, std::memory_order_relaxed);
}

void axpy_mod(std::span<std::uint32_t> y, std::uint32_t c, std::span<const std::uint32_t> x,
              std::uint32_t q) {
  if (active_isa() == Isa::kAvx2) return avx2::axpy_mod(y, c, x, q);
  scalar::axpy_mod(y, c, x, q);
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t q) {
  if (active_isa() == Isa::kAvx2) return avx2::scale_mod(y, c, q);
  scalar::scale_mod(y, c, q);
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t q) {
  if (active_isa() == Isa::kAvx2) return avx2::dot_mod(a, b, q);
  return scalar::dot_mod(a, b, q);
}

void matmul_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                std::span<std::uint32_t> c, std::size_t rows, std::size_t inner, std::size_t cols,
                std::uint32_t q) {
  if (active_isa() == Isa::kAvx2) return avx2::matmul_mod(a, b, c, rows, inner, cols, q);
  scalar::matmul_mod(a, b, c, rows, inner, cols, q);
}

}  // namespace critpoints::kernels
