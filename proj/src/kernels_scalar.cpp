#include <bit>

#include "mindist/kernels.hpp"

namespace mindist::kernels::scalar {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t len, std::uint32_t c,
              std::uint32_t p) {
  for (std::size_t i = 0; i < len; ++i)
    dst[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) * src[i] + dst[i]) % p);
}

void scale_mod(std::uint32_t* dst, std::size_t len, std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < len; ++i)
    dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * dst[i] % p);
}

std::size_t count_nonzero(const std::uint32_t* v, std::size_t len) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < len; ++i) n += v[i] != 0;
  return n;
}

void xor_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

void and_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= src[i];
}

void andnot_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= ~src[i];
}

std::uint64_t popcount(const std::uint64_t* v, std::size_t words) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < words; ++i) n += std::popcount(v[i]);
  return n;
}

}  // namespace mindist::kernels::scalar
