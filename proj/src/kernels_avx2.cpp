#include "hgf/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace hgf::kernels {
namespace {

// Products below 2^52 are exact in doubles, so the quotient estimate is off by at most one.
constexpr std::uint32_t kFloatPathLimit = 1u << 26;

void axpy_tail(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t a,
               std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = static_cast<std::uint32_t>((y[i] + std::uint64_t{a} * x[i]) % p);
  }
}

void axpy_avx2(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t a,
               std::uint32_t p) {
  if (p >= kFloatPathLimit) return axpy_tail(y, x, n, a, p);
  const __m256d vp = _mm256_set1_pd(p);
  const __m256d vinv = _mm256_set1_pd(1.0 / p);
  const __m256d va = _mm256_set1_pd(a);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vx = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i)));
    __m256d vy = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i)));
    __m256d prod = _mm256_fmadd_pd(va, vx, vy);
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(prod, vinv));
    __m256d r = _mm256_fnmadd_pd(q, vp, prod);
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i), _mm256_cvttpd_epi32(r));
  }
  axpy_tail(y + i, x + i, n - i, a, p);
}

std::uint32_t dot_avx2(const std::uint32_t* x, const std::uint32_t* y, std::size_t n,
                       std::uint32_t p) {
  const std::uint64_t pm = p - 1;
  // Each lane absorbs one product per step; keep every lane below 2^64.
  const std::uint64_t chunk = ~std::uint64_t{0} / (pm * pm + 1);
  std::uint64_t total = 0;
  std::size_t i = 0;
  while (i + 4 <= n) {
    __m256i acc = _mm256_setzero_si256();
    std::uint64_t steps = 0;
    for (; i + 4 <= n && steps < chunk; i += 4, ++steps) {
      __m256i vx = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i)));
      __m256i vy = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i)));
      acc = _mm256_add_epi64(acc, _mm256_mul_epu32(vx, vy));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (std::uint64_t v : lanes) total = (total + v % p) % p;
  }
  for (; i < n; ++i) total = (total + std::uint64_t{x[i]} * y[i]) % p;
  return static_cast<std::uint32_t>(total);
}

const Table kAvx2{"avx2", axpy_avx2, dot_avx2};

}  // namespace

namespace detail {
const Table* avx2_table() { return &kAvx2; }
}  // namespace detail

}  // namespace hgf::kernels

#else

namespace hgf::kernels::detail {
const Table* avx2_table() { return nullptr; }
}  // namespace hgf::kernels::detail

#endif
