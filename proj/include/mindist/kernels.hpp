#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Hot inner loops shared by the exact linear algebra (mod-p row elimination)
// and the packed GF(2) paths (codeword enumeration, boolean truth tables).
// Every kernel has a scalar reference implementation; on x86-64 an AVX2+FMA
// variant is selected at runtime when the CPU supports it. The two variants
// are bit-for-bit equivalent and equivalence-tested.
//
// Preconditions for the mod-p kernels: all entries < p, c < p, p < 2^31.
// The AVX2 path additionally requires p < 2^25 (double-precision reduction);
// the dispatcher falls back to scalar for larger moduli.

namespace mindist::kernels {

// dst[i] = (dst[i] + c * src[i]) mod p
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t len, std::uint32_t c,
              std::uint32_t p);
// dst[i] = (c * dst[i]) mod p
void scale_mod(std::uint32_t* dst, std::size_t len, std::uint32_t c, std::uint32_t p);
std::size_t count_nonzero(const std::uint32_t* v, std::size_t len);

void xor_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
void and_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
// dst &= ~src
void andnot_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
std::uint64_t popcount(const std::uint64_t* v, std::size_t words);

// "avx2" or "scalar"; decided once per process from CPU features.
std::string_view active_backend();
// For equivalence tests and benchmarking.
void force_scalar(bool on);

namespace scalar {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t len, std::uint32_t c,
              std::uint32_t p);
void scale_mod(std::uint32_t* dst, std::size_t len, std::uint32_t c, std::uint32_t p);
std::size_t count_nonzero(const std::uint32_t* v, std::size_t len);
void xor_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
void and_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
void andnot_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
std::uint64_t popcount(const std::uint64_t* v, std::size_t words);
}  // namespace scalar

#if defined(MINDIST_HAVE_AVX2)
namespace avx2 {
bool supported();
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t len, std::uint32_t c,
              std::uint32_t p);
void scale_mod(std::uint32_t* dst, std::size_t len, std::uint32_t c, std::uint32_t p);
std::size_t count_nonzero(const std::uint32_t* v, std::size_t len);
void xor_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
void and_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
void andnot_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
std::uint64_t popcount(const std::uint64_t* v, std::size_t words);
}  // namespace avx2
#endif

}  // namespace mindist::kernels
