#include "kernels_internal.hpp"

#if defined(PBLOCKS_HAVE_AVX2_TU)

#include <immintrin.h>

namespace pblocks::simd::detail {
namespace {

void gather_add_avx2(std::uint64_t* out, const std::uint32_t* src, const std::uint32_t* idx, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i index = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx + i));
    __m256i vals = _mm256_i32gather_epi32(reinterpret_cast<const int*>(src), index, 4);
    __m256i lo = _mm256_cvtepu32_epi64(_mm256_castsi256_si128(vals));
    __m256i hi = _mm256_cvtepu32_epi64(_mm256_extracti128_si256(vals, 1));
    auto* o = reinterpret_cast<__m256i*>(out + i);
    _mm256_storeu_si256(o, _mm256_add_epi64(_mm256_loadu_si256(o), lo));
    _mm256_storeu_si256(o + 1, _mm256_add_epi64(_mm256_loadu_si256(o + 1), hi));
  }
  for (; i < n; ++i) out[i] += src[idx[i]];
}

// x is an exact integer below 2^53; the floor of x * (1/q) is off by at most one.
inline __m256d reduce_pd(__m256d x, __m256d qd, __m256d qinv) {
  __m256d quo = _mm256_floor_pd(_mm256_mul_pd(x, qinv));
  __m256d r = _mm256_fnmadd_pd(quo, qd, x);
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), qd));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, qd, _CMP_GE_OQ), qd));
  return r;
}

void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t q,
                   std::size_t n) {
  const __m256d qd = _mm256_set1_pd(q);
  const __m256d qinv = _mm256_set1_pd(1.0 / q);
  const __m256d fd = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d s = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i)));
    __m256d d = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
    __m256d r = reduce_pd(_mm256_fmadd_pd(fd, s, d), qd, qinv);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvttpd_epi32(r));
  }
  for (; i < n; ++i) dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t{factor} * src[i]) % q);
}

std::uint32_t dot_mod_avx2(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t q, std::size_t n) {
  const __m256d qd = _mm256_set1_pd(q);
  const __m256d qinv = _mm256_set1_pd(1.0 / q);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
    __m256d y = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i)));
    acc = reduce_pd(_mm256_fmadd_pd(x, y, acc), qd, qinv);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  std::uint64_t total = 0;
  for (double lane : lanes) total = (total + static_cast<std::uint64_t>(lane)) % q;
  for (; i < n; ++i) total = (total + std::uint64_t{a[i]} * b[i]) % q;
  return static_cast<std::uint32_t>(total);
}

}  // namespace

const KernelTable avx2_table{Isa::avx2, gather_add_avx2, axpy_mod_avx2, dot_mod_avx2};

}  // namespace pblocks::simd::detail

#endif
