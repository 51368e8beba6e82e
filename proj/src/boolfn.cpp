#include "mindist/boolfn.hpp"

#include <bit>

#include "mindist/combinatorics.hpp"
#include "mindist/kernels.hpp"
#include "mindist/matrix.hpp"

namespace mindist {

namespace {

std::size_t words_for(std::size_t n) { return n >= 6 ? (std::size_t(1) << (n - 6)) : 1; }

// Table of the coordinate function y_{i+1}: bit p is set iff bit i of p is.
// For i >= 6 whole words alternate; below that the pattern is a constant.
std::uint64_t var_word(std::size_t i, std::size_t w) {
  static constexpr std::uint64_t pat[6] = {
      0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
      0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull};
  if (i < 6) return pat[i];
  return (w >> (i - 6)) & 1 ? ~0ull : 0ull;
}

void check_budget(std::size_t n) {
  if (n > kBoolBudgetN)
    fail(errc::budget_exceeded,
         "truth tables limited to n <= " + std::to_string(kBoolBudgetN));
}

std::uint64_t tail_mask(std::size_t n) {
  return n >= 6 ? ~0ull : (1ull << (std::size_t(1) << n)) - 1;
}

std::size_t points_total(std::size_t n) { return std::size_t(1) << n; }

}  // namespace

BoolFn::BoolFn(std::size_t n) : n_(n), bits_(words_for(n), 0) { check_budget(n); }

BoolFn BoolFn::linear(std::size_t n, std::uint64_t coef_mask) {
  BoolFn f(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(coef_mask >> i & 1)) continue;
    for (std::size_t w = 0; w < f.bits_.size(); ++w) f.bits_[w] ^= var_word(i, w);
  }
  if (n < 6)
    for (auto& w : f.bits_) w &= tail_mask(n);
  return f;
}

BoolFn BoolFn::monomial(std::size_t n, std::uint64_t var_mask) {
  BoolFn f(n);
  for (auto& w : f.bits_) w = ~0ull;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(var_mask >> i & 1)) continue;
    for (std::size_t w = 0; w < f.bits_.size(); ++w) f.bits_[w] &= var_word(i, w);
  }
  for (auto& w : f.bits_) w &= tail_mask(n);
  return f;
}

bool BoolFn::eval(std::uint64_t point) const { return bits_[point / 64] >> (point % 64) & 1; }

void BoolFn::set(std::uint64_t point, bool v) {
  if (v)
    bits_[point / 64] |= 1ull << (point % 64);
  else
    bits_[point / 64] &= ~(1ull << (point % 64));
}

BoolFn& BoolFn::operator^=(const BoolFn& other) {
  kernels::xor_inplace(bits_.data(), other.bits_.data(), bits_.size());
  return *this;
}

BoolFn& BoolFn::operator&=(const BoolFn& other) {
  kernels::and_inplace(bits_.data(), other.bits_.data(), bits_.size());
  return *this;
}

bool BoolFn::is_zero() const {
  for (auto w : bits_)
    if (w) return false;
  return true;
}

std::uint64_t BoolFn::count_ones() const {
  return kernels::popcount(bits_.data(), bits_.size());
}

std::vector<BoolFn> relation_forms(const LinearCode<Gfp>& c) {
  if (c.field.modulus() != 2)
    fail(errc::unsupported_field, "the boolean quotient is defined over F2");
  check_budget(c.n());
  auto d = dual(c);  // ZeroDual when k = n
  std::vector<BoolFn> out;
  for (std::size_t r = 0; r < d.k(); ++r) {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < d.n(); ++j)
      if (d.gen.at(r, j)) mask |= 1ull << j;
    out.push_back(BoolFn::linear(c.n(), mask));
  }
  return out;
}

std::size_t ideal_dim(const std::vector<BoolFn>& gens, std::size_t n) {
  check_budget(n);
  // common zero set
  BoolFn zero_set = BoolFn::monomial(n, 0);  // constant one = all points
  for (const auto& g : gens)
    kernels::andnot_inplace(zero_set.words().data(), g.words().data(), zero_set.words().size());
  return points_total(n) - static_cast<std::size_t>(zero_set.count_ones());
}

std::size_t ideal_dim_rank(const std::vector<BoolFn>& gens, std::size_t n) {
  if (n > kBoolProductBudgetN)
    fail(errc::budget_exceeded, "rank route limited to n <= " + std::to_string(kBoolProductBudgetN));
  Gf2RowBasis basis(points_total(n));
  for (const auto& g : gens) {
    for (std::uint64_t m = 0; m < points_total(n); ++m) {
      BoolFn mult = BoolFn::monomial(n, m);
      mult &= g;
      basis.insert(mult.words());
    }
  }
  return basis.rank();
}

bool prop_check(const LinearCode<Gfp>& c, std::size_t a) {
  if (a < 1 || a > c.n()) fail(errc::bad_range, "need 1 <= a <= n");
  auto gens = relation_forms(c);
  for_each_combination(c.n(), a, [&](const std::vector<std::size_t>& sub) {
    std::uint64_t mask = 0;
    for (auto i : sub) mask |= 1ull << i;
    gens.push_back(BoolFn::monomial(c.n(), mask));
  });
  return ideal_dim(gens, c.n()) == points_total(c.n()) - 1;
}

GrDims gr_dims(const LinearCode<Gfp>& c) {
  std::size_t n = c.n();
  auto relations = relation_forms(c);
  // D[a] = dim(F(C) + I(Y,a)) for a = 0..n+1; I(Y,n+1) = 0.
  std::vector<std::size_t> D(n + 2, 0);
  for (std::size_t a = 0; a <= n + 1; ++a) {
    auto gens = relations;
    if (a <= n)
      for_each_combination(n, a, [&](const std::vector<std::size_t>& sub) {
        std::uint64_t mask = 0;
        for (auto i : sub) mask |= 1ull << i;
        gens.push_back(BoolFn::monomial(n, mask));
      });
    D[a] = ideal_dim(gens, n);
  }
  GrDims out;
  out.dims.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out.dims[i] = D[n - i] - D[n - i + 1];
  return out;
}

GrJumps gr_jump_indices(const LinearCode<Gfp>& c) {
  auto dims = gr_dims(c).dims;
  std::size_t n = c.n();
  GrJumps out{0, std::nullopt};
  for (std::size_t i = 0; i + 1 <= n; ++i)
    if (dims[i] != 0) out.top_jump = i;
  // gr_n is the zero codeword's piece and is always nonzero, so the literal
  // reading scans 1..n-1; d = n codes report none
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    if (dims[i] != 0) {
      out.literal_alpha_positive = i;
      break;
    }
  }
  return out;
}

bool filtration_product_check(std::size_t n, std::size_t a, std::size_t b) {
  if (n > kBoolProductBudgetN)
    fail(errc::budget_exceeded,
         "exhaustive generator pairs limited to n <= " + std::to_string(kBoolProductBudgetN));
  if (a > n || b > n) fail(errc::bad_range, "need a, b <= n");
  if (a + b >= n) return true;  // F_{a+b} is the whole ring
  std::size_t target = n - a - b;
  auto gens_a = combinations(n, n - a);
  auto gens_b = combinations(n, n - b);
  for (const auto& sa : gens_a) {
    std::uint64_t ma = 0;
    for (auto i : sa) ma |= 1ull << i;
    BoolFn fa = BoolFn::monomial(n, ma);
    for (const auto& sb : gens_b) {
      std::uint64_t mb = 0;
      for (auto i : sb) mb |= 1ull << i;
      BoolFn prod = fa;
      prod &= BoolFn::monomial(n, mb);
      // membership in I(Y,target): must vanish on all points of weight < target
      for (std::uint64_t p = 0; p < (std::uint64_t(1) << n); ++p) {
        if (static_cast<std::size_t>(std::popcount(p)) < target && prod.eval(p)) return false;
      }
    }
  }
  return true;
}

}  // namespace mindist
