#include "regrep/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define REGREP_AVX2 __attribute__((target("avx2,fma")))
#endif

namespace regrep::kernels {

#if defined(__x86_64__) || defined(__i386__)

namespace {

// t holds exact integers below 2^53; returns t mod ell as doubles in [0, ell).
REGREP_AVX2 inline __m256d reduce_pd(__m256d t, __m256d ell, __m256d ell_inv) {
  const __m256d quotient = _mm256_floor_pd(_mm256_mul_pd(t, ell_inv));
  __m256d rem = _mm256_fnmadd_pd(quotient, ell, t);
  rem = _mm256_add_pd(rem, _mm256_and_pd(_mm256_cmp_pd(rem, _mm256_setzero_pd(), _CMP_LT_OQ), ell));
  rem = _mm256_sub_pd(rem, _mm256_and_pd(_mm256_cmp_pd(rem, ell, _CMP_GE_OQ), ell));
  return rem;
}

REGREP_AVX2 inline std::uint64_t fold_lanes(__m256i v, std::uint64_t total, std::uint32_t ell) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  for (auto lane : lanes) total = (total + lane % ell) % ell;
  return total;
}

}  // namespace

REGREP_AVX2 void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n,
                               std::uint32_t ell) {
  const __m256d vell = _mm256_set1_pd(static_cast<double>(ell));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(ell));
  const __m256d va = _mm256_set1_pd(static_cast<double>(a));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i)));
    const __m256d vy = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i)));
    const __m256d r = reduce_pd(_mm256_fmadd_pd(va, vx, vy), vell, vinv);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i), _mm256_cvttpd_epi32(r));
  }
  axpy_mod_scalar(y + i, x + i, a, n - i, ell);
}

REGREP_AVX2 void scale_mod_avx2(std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t ell) {
  const __m256d vell = _mm256_set1_pd(static_cast<double>(ell));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(ell));
  const __m256d va = _mm256_set1_pd(static_cast<double>(a));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i)));
    const __m256d r = reduce_pd(_mm256_mul_pd(va, vx), vell, vinv);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(x + i), _mm256_cvttpd_epi32(r));
  }
  scale_mod_scalar(x + i, a, n - i, ell);
}

REGREP_AVX2 std::uint32_t dot_mod_avx2(const std::uint32_t* x, const std::uint32_t* y, std::size_t n,
                                       std::uint32_t ell) {
  __m256i acc = _mm256_setzero_si256();
  std::uint64_t total = 0;
  std::size_t i = 0, block = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i vx = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i)));
    const __m256i vy = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i)));
    acc = _mm256_add_epi64(acc, _mm256_mul_epu32(vx, vy));
    if (++block == 2048) {
      total = fold_lanes(acc, total, ell);
      acc = _mm256_setzero_si256();
      block = 0;
    }
  }
  total = fold_lanes(acc, total, ell);
  return static_cast<std::uint32_t>((total + dot_mod_scalar(x + i, y + i, n - i, ell)) % ell);
}

#else

void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t ell) {
  axpy_mod_scalar(y, x, a, n, ell);
}
void scale_mod_avx2(std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t ell) {
  scale_mod_scalar(x, a, n, ell);
}
std::uint32_t dot_mod_avx2(const std::uint32_t* x, const std::uint32_t* y, std::size_t n, std::uint32_t ell) {
  return dot_mod_scalar(x, y, n, ell);
}

#endif

}  // namespace regrep::kernels
