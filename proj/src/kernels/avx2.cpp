// Compiled with -mavx2 -mfma on x86-64; nothing in here runs unless
// avx2::supported() is true.

#include <cstddef>
#include <limits>

#include "critpoints/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)
#define CRITPOINTS_HAVE_AVX2 1
#include <immintrin.h>
#else
#define CRITPOINTS_HAVE_AVX2 0
#endif

namespace critpoints::kernels::avx2 {

#if CRITPOINTS_HAVE_AVX2

namespace {

// The double-precision route needs q + q^2 < 2^53 so that y + c*x is exact.
constexpr std::uint32_t kDoubleRouteLimit = 1u << 26;

inline __m256d reduce_pd(__m256d v, __m256d qd, __m256d invq) {
  __m256d quo = _mm256_floor_pd(_mm256_mul_pd(v, invq));
  __m256d r = _mm256_fnmadd_pd(quo, qd, v);
  // quo may be off by one in either direction.
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), qd));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, qd, _CMP_GE_OQ), qd));
  return r;
}

inline __m256d load4(const std::uint32_t* p) {
  return _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

inline void store4(std::uint32_t* p, __m256d v) {
  _mm_storeu_si128(reinterpret_cast<__m128i*>(p), _mm256_cvtpd_epi32(v));
}

}  // namespace

bool supported() {
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
}

void axpy_mod(std::span<std::uint32_t> y, std::uint32_t c, std::span<const std::uint32_t> x,
              std::uint32_t q) {
  if (q >= kDoubleRouteLimit) return scalar::axpy_mod(y, c, x, q);
  const __m256d qd = _mm256_set1_pd(q);
  const __m256d invq = _mm256_set1_pd(1.0 / q);
  const __m256d cd = _mm256_set1_pd(c);
  const std::size_t n = y.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d lo = _mm256_fmadd_pd(cd, load4(x.data() + i), load4(y.data() + i));
    __m256d hi = _mm256_fmadd_pd(cd, load4(x.data() + i + 4), load4(y.data() + i + 4));
    store4(y.data() + i, reduce_pd(lo, qd, invq));
    store4(y.data() + i + 4, reduce_pd(hi, qd, invq));
  }
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_fmadd_pd(cd, load4(x.data() + i), load4(y.data() + i));
    store4(y.data() + i, reduce_pd(v, qd, invq));
  }
  if (i < n) scalar::axpy_mod(y.subspan(i), c, x.subspan(i), q);
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t q) {
  if (q >= kDoubleRouteLimit) return scalar::scale_mod(y, c, q);
  const __m256d qd = _mm256_set1_pd(q);
  const __m256d invq = _mm256_set1_pd(1.0 / q);
  const __m256d cd = _mm256_set1_pd(c);
  const std::size_t n = y.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    store4(y.data() + i, reduce_pd(_mm256_mul_pd(cd, load4(y.data() + i)), qd, invq));
  }
  if (i < n) scalar::scale_mod(y.subspan(i), c, q);
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t q) {
  const std::uint64_t qm1 = q - 1;
  // Each 64-bit lane absorbs one product per iteration.
  const std::uint64_t budget = std::numeric_limits<std::uint64_t>::max() / (qm1 * qm1);
  const std::size_t n = a.size();
  __m256i even = _mm256_setzero_si256();
  __m256i odd = _mm256_setzero_si256();
  std::uint64_t pending = 0;
  std::size_t i = 0;
  auto fold = [&]() {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), even);
    for (auto& l : lanes) l %= q;
    even = _mm256_load_si256(reinterpret_cast<const __m256i*>(lanes));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), odd);
    for (auto& l : lanes) l %= q;
    odd = _mm256_load_si256(reinterpret_cast<const __m256i*>(lanes));
    pending = 1;
  };
  for (; i + 8 <= n; i += 8) {
    if (pending + 1 >= budget) fold();
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    even = _mm256_add_epi64(even, _mm256_mul_epu32(va, vb));
    odd = _mm256_add_epi64(odd, _mm256_mul_epu32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vb, 32)));
    ++pending;
  }
  alignas(32) std::uint64_t e[4], o[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(e), even);
  _mm256_store_si256(reinterpret_cast<__m256i*>(o), odd);
  std::uint64_t acc = 0;
  for (int k = 0; k < 4; ++k) acc = (acc + e[k] % q + o[k] % q) % q;
  if (i < n) acc = (acc + scalar::dot_mod(a.subspan(i), b.subspan(i), q)) % q;
  return static_cast<std::uint32_t>(acc);
}

#else

bool supported() { return false; }

void axpy_mod(std::span<std::uint32_t> y, std::uint32_t c, std::span<const std::uint32_t> x,
              std::uint32_t q) {
  scalar::axpy_mod(y, c, x, q);
}
void scale_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t q) {
  scalar::scale_mod(y, c, q);
}
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t q) {
  return scalar::dot_mod(a, b, q);
}

#endif

}  // namespace critpoints::kernels::avx2
