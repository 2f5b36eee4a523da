#pragma once

// Dense GF(q) vector kernels used by the echelon and change-of-order code.
//
// Every kernel has a portable scalar reference in kernels::scalar and, where
// the build targets x86-64, an AVX2 variant in kernels::avx2. The unqualified
// entry points dispatch at runtime to the active ISA. All variants return
// bit-identical results; inputs must already be reduced into [0, q).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace critpoints::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// Best ISA supported by the running CPU.
Isa detected_isa();
/// ISA the dispatching entry points currently use (defaults to detected_isa()).
Isa active_isa();
/// Throws std::invalid_argument if the CPU cannot run `isa`.
void set_active_isa(Isa isa);

/// y[i] <- (y[i] + c * x[i]) mod q. Spans must have equal length.
void axpy_mod(std::span<std::uint32_t> y, std::uint32_t c, std::span<const std::uint32_t> x,
              std::uint32_t q);
/// y[i] <- c * y[i] mod q.
void scale_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t q);
/// sum_i a[i] * b[i] mod q.
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t q);

/// Column-major product c <- a * b mod q with a (rows x inner), b (inner x
/// cols), c (rows x cols).
void matmul_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                std::span<std::uint32_t> c, std::size_t rows, std::size_t inner, std::size_t cols,
                std::uint32_t q);

namespace scalar {
void axpy_mod(std::span<std::uint32_t> y, std::uint32_t c, std::span<const std::uint32_t> x,
              std::uint32_t q);
void scale_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t q);
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t q);
void matmul_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                std::span<std::uint32_t> c, std::size_t rows, std::size_t inner, std::size_t cols,
                std::uint32_t q);
}  // namespace scalar


namespace avx2 {
/// True when compiled in and the CPU reports AVX2 and FMA.
bool supported();
void axpy_mod(std::span<std::uint32_t> y, std::uint32_t c, std::span<const std::uint32_t> x,
              std::uint32_t q);
void scale_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t q);
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t q);
/// Double-precision GEMM over inner-dimension chunks small enough that every
/// partial sum is an exact integer below 2^53.
void matmul_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                std::span<std::uint32_t> c, std::size_t rows, std::size_t inner, std::size_t cols,
                std::uint32_t q);
}  // namespace avx2

}  // namespace critpoints::kernels
