#include "mindist/kernels.hpp"

#if defined(MINDIST_HAVE_AVX2)

#include <immintrin.h>

#include <bit>

namespace mindist::kernels::avx2 {

bool supported() { return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"); }

namespace {

// Reduce t in [0, p^2) to t mod p with p < 2^25. q = floor(t * (1/p)) is off
// by at most one, and t - q*p is an exact integer below 2^26, so fnmadd
// introduces no rounding; two conditional corrections land the result in [0,p).
inline __m256d mod_reduce(__m256d t, __m256d vp, __m256d vinv) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vinv));
  __m256d r = _mm256_fnmadd_pd(q, vp, t);
  r = _mm256_add_pd(r, _mm256_and_pd(vp, _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ)));
  r = _mm256_sub_pd(r, _mm256_and_pd(vp, _mm256_cmp_pd(r, vp, _CMP_GE_OQ)));
  return r;
}

// Per-byte popcount via the nibble shuffle LUT, summed into 4 u64 lanes.
inline __m256i popcnt256(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2,
                                       1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

}  // namespace

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t len, std::uint32_t c,
              std::uint32_t p) {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m128i d32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i));
    __m128i s32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i));
    __m256d t = _mm256_fmadd_pd(vc, _mm256_cvtepi32_pd(s32), _mm256_cvtepi32_pd(d32));
    __m128i out = _mm256_cvttpd_epi32(mod_reduce(t, vp, vinv));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), out);
  }
  for (; i < len; ++i)
    dst[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) * src[i] + dst[i]) % p);
}

void scale_mod(std::uint32_t* dst, std::size_t len, std::uint32_t c, std::uint32_t p) {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m128i d32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i));
    __m256d t = _mm256_mul_pd(vc, _mm256_cvtepi32_pd(d32));
    __m128i out = _mm256_cvttpd_epi32(mod_reduce(t, vp, vinv));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), out);
  }
  for (; i < len; ++i)
    dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * dst[i] % p);
}

std::size_t count_nonzero(const std::uint32_t* v, std::size_t len) {
  std::size_t zero = 0, i = 0;
  const __m256i vz = _mm256_setzero_si256();
  for (; i + 8 <= len; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, vz)));
    zero += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(mask)));
  }
  std::size_t nz = i - zero;
  for (; i < len; ++i) nz += v[i] != 0;
  return nz;
}

void xor_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
  }
  for (; i < words; ++i) dst[i] ^= src[i];
}

void and_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(a, b));
  }
  for (; i < words; ++i) dst[i] &= src[i];
}

void andnot_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    // andnot(b, a) = ~b & a
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(b, a));
  }
  for (; i < words; ++i) dst[i] &= ~src[i];
}

std::uint64_t popcount(const std::uint64_t* v, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    acc = _mm256_add_epi64(acc, popcnt256(x));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t n = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < words; ++i) n += std::popcount(v[i]);
  return n;
}

}  // namespace mindist::kernels::avx2

#endif  // MINDIST_HAVE_AVX2
