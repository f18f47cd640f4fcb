#include "repalg/modp.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace repalg::modp {

#if defined(__AVX2__)

namespace {

// Reduces 64-bit lanes holding values below 2^63 to [0, p).
inline __m256i fold_lanes(__m256i x, __m256i p) {
  x = _mm256_add_epi64(_mm256_and_si256(x, p), _mm256_srli_epi64(x, 31));
  x = _mm256_add_epi64(_mm256_and_si256(x, p), _mm256_srli_epi64(x, 31));
  __m256i ge = _mm256_cmpgt_epi64(x, _mm256_sub_epi64(p, _mm256_set1_epi64x(1)));
  return _mm256_sub_epi64(x, _mm256_and_si256(ge, p));
}

}  // namespace

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::size_t n) {
  const __m256i p = _mm256_set1_epi64x(kPrime);
  const __m256i lo = _mm256_set1_epi64x(0xFFFFFFFFll);
  const __m256i f = _mm256_set1_epi64x(factor);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i even = _mm256_add_epi64(_mm256_mul_epu32(s, f), _mm256_and_si256(d, lo));
    __m256i odd = _mm256_add_epi64(_mm256_mul_epu32(_mm256_srli_epi64(s, 32), f), _mm256_srli_epi64(d, 32));
    even = fold_lanes(even, p);
    odd = fold_lanes(odd, p);
    __m256i out = _mm256_or_si256(even, _mm256_slli_epi64(odd, 32));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), out);
  }
  axpy_scalar(dst + i, src + i, factor, n - i);
}

#else

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::size_t n) {
  axpy_scalar(dst, src, factor, n);
}

#endif

}  // namespace repalg::modp
