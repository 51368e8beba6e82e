#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mindist/field.hpp"
#include "mindist/kernels.hpp"
#include "mindist/matrix.hpp"

using namespace mindist;

namespace {

std::vector<std::uint32_t> random_residues(std::mt19937& rng, std::size_t len, std::uint32_t p) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  std::vector<std::uint32_t> v(len);
  for (auto& x : v) x = dist(rng);
  return v;
}

std::vector<std::uint64_t> random_words(std::mt19937& rng, std::size_t words) {
  std::vector<std::uint64_t> v(words);
  for (auto& x : v) x = (std::uint64_t(rng()) << 32) | rng();
  return v;
}

std::uint32_t largest_prime_below(std::uint32_t n) {
  for (std::uint32_t p = n - 1;; --p)
    if (is_prime_u32(p)) return p;
}

}  // namespace

TEST_CASE("scalar axpy_mod matches the definition") {
  std::mt19937 rng(1);
  for (std::uint32_t p : {2u, 3u, 7u, 32003u}) {
    auto dst = random_residues(rng, 37, p);
    auto src = random_residues(rng, 37, p);
    std::uint32_t c = p - 1;
    auto expect = dst;
    for (std::size_t i = 0; i < dst.size(); ++i)
      expect[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) * src[i] + dst[i]) % p);
    kernels::scalar::axpy_mod(dst.data(), src.data(), dst.size(), c, p);
    CHECK(dst == expect);
  }
}

#if defined(MINDIST_HAVE_AVX2)
TEST_CASE("avx2 mod-p kernels agree with scalar bit for bit") {
  if (!kernels::avx2::supported()) return;
  std::mt19937 rng(2);
  std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 1009, 32003, 46337,
                                    largest_prime_below(1u << 25)};
  for (auto p : primes) {
    std::uniform_int_distribution<std::uint32_t> cd(0, p - 1);
    for (std::size_t len : {std::size_t(0), std::size_t(1), std::size_t(3), std::size_t(4),
                            std::size_t(8), std::size_t(17), std::size_t(64), std::size_t(129)}) {
      auto a = random_residues(rng, len, p);
      auto b = random_residues(rng, len, p);
      std::uint32_t c = cd(rng);
      auto a1 = a, a2 = a;
      kernels::scalar::axpy_mod(a1.data(), b.data(), len, c, p);
      kernels::avx2::axpy_mod(a2.data(), b.data(), len, c, p);
      CHECK(a1 == a2);
      auto s1 = a, s2 = a;
      kernels::scalar::scale_mod(s1.data(), len, c, p);
      kernels::avx2::scale_mod(s2.data(), len, c, p);
      CHECK(s1 == s2);
      CHECK(kernels::scalar::count_nonzero(a.data(), len) ==
            kernels::avx2::count_nonzero(a.data(), len));
    }
  }
}

TEST_CASE("avx2 word kernels agree with scalar") {
  if (!kernels::avx2::supported()) return;
  std::mt19937 rng(3);
  for (std::size_t words : {std::size_t(0), std::size_t(1), std::size_t(2), std::size_t(4),
                            std::size_t(5), std::size_t(16), std::size_t(33)}) {
    auto a = random_words(rng, words);
    auto b = random_words(rng, words);
    auto x1 = a, x2 = a;
    kernels::scalar::xor_inplace(x1.data(), b.data(), words);
    kernels::avx2::xor_inplace(x2.data(), b.data(), words);
    CHECK(x1 == x2);
    auto n1 = a, n2 = a;
    kernels::scalar::and_inplace(n1.data(), b.data(), words);
    kernels::avx2::and_inplace(n2.data(), b.data(), words);
    CHECK(n1 == n2);
    auto d1 = a, d2 = a;
    kernels::scalar::andnot_inplace(d1.data(), b.data(), words);
    kernels::avx2::andnot_inplace(d2.data(), b.data(), words);
    CHECK(d1 == d2);
    CHECK(kernels::scalar::popcount(a.data(), words) == kernels::avx2::popcount(a.data(), words));
  }
}
#endif

TEST_CASE("dispatcher falls back to scalar when forced") {
  std::mt19937 rng(4);
  auto a = random_residues(rng, 50, 32003);
  auto b = random_residues(rng, 50, 32003);
  auto a1 = a, a2 = a;
  kernels::axpy_mod(a1.data(), b.data(), a.size(), 12345, 32003);
  kernels::force_scalar(true);
  CHECK(kernels::active_backend() == "scalar");
  kernels::axpy_mod(a2.data(), b.data(), a.size(), 12345, 32003);
  kernels::force_scalar(false);
  CHECK(a1 == a2);
}

TEST_CASE("dispatched mod kernel handles moduli beyond the simd limit") {
  std::uint32_t p = largest_prime_below(1u << 30);
  std::mt19937 rng(5);
  auto a = random_residues(rng, 20, p);
  auto b = random_residues(rng, 20, p);
  auto expect = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    expect[i] =
        static_cast<std::uint32_t>((static_cast<std::uint64_t>(p - 2) * b[i] + a[i]) % p);
  kernels::axpy_mod(a.data(), b.data(), a.size(), p - 2, p);
  CHECK(a == expect);
}

TEST_CASE("packed GF(2) rank equals naive entry-wise elimination on 100 random matrices") {
  std::mt19937 rng(6);
  Gfp f2(2);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 20;
    std::vector<std::vector<Gfp::elem>> m(rows, std::vector<Gfp::elem>(cols));
    Gf2RowBasis packed(cols);
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<std::uint64_t> word((cols + 63) / 64, 0);
      for (std::size_t c = 0; c < cols; ++c) {
        m[r][c] = rng() & 1;
        if (m[r][c]) word[c / 64] |= 1ull << (c % 64);
      }
      packed.insert(std::move(word));
    }
    CHECK(packed.rank() == rank_of(Matrix<Gfp>::from_rows(f2, m)));
  }
}
