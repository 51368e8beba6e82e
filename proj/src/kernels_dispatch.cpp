#include <atomic>

#include "mindist/kernels.hpp"

namespace mindist::kernels {

namespace {

bool cpu_has_simd() {
#if defined(MINDIST_HAVE_AVX2)
  return avx2::supported();
#else
  return false;
#endif
}

std::atomic<bool> g_force_scalar{false};
const bool g_cpu_simd = cpu_has_simd();

inline bool use_simd() { return g_cpu_simd && !g_force_scalar.load(std::memory_order_relaxed); }

// The double-precision reduction needs p^2 well inside the 53-bit mantissa.
constexpr std::uint32_t kSimdModLimit = 1u << 25;

}  // namespace

std::string_view active_backend() { return use_simd() ? "avx2" : "scalar"; }

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t len, std::uint32_t c,
              std::uint32_t p) {
#if defined(MINDIST_HAVE_AVX2)
  if (use_simd() && p < kSimdModLimit) {
    avx2::axpy_mod(dst, src, len, c, p);
    return;
  }
#endif
  scalar::axpy_mod(dst, src, len, c, p);
}

void scale_mod(std::uint32_t* dst, std::size_t len, std::uint32_t c, std::uint32_t p) {
#if defined(MINDIST_HAVE_AVX2)
  if (use_simd() && p < kSimdModLimit) {
    avx2::scale_mod(dst, len, c, p);
    return;
  }
#endif
  scalar::scale_mod(dst, len, c, p);
}

std::size_t count_nonzero(const std::uint32_t* v, std::size_t len) {
#if defined(MINDIST_HAVE_AVX2)
  if (use_simd()) return avx2::count_nonzero(v, len);
#endif
  return scalar::count_nonzero(v, len);
}

void xor_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
#if defined(MINDIST_HAVE_AVX2)
  if (use_simd()) {
    avx2::xor_inplace(dst, src, words);
    return;
  }
#endif
  scalar::xor_inplace(dst, src, words);
}

void and_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
#if defined(MINDIST_HAVE_AVX2)
  if (use_simd()) {
    avx2::and_inplace(dst, src, words);
    return;
  }
#endif
  scalar::and_inplace(dst, src, words);
}

void andnot_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
#if defined(MINDIST_HAVE_AVX2)
  if (use_simd()) {
    avx2::andnot_inplace(dst, src, words);
    return;
  }
#endif
  scalar::andnot_inplace(dst, src, words);
}

std::uint64_t popcount(const std::uint64_t* v, std::size_t words) {
#if defined(MINDIST_HAVE_AVX2)
  if (use_simd()) return avx2::popcount(v, words);
#endif
  return scalar::popcount(v, words);
}

}  // namespace mindist::kernels
