#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "mindist/matrix.hpp"

namespace mindist {

// An [n, k] linear code presented by a rank-k generator matrix. Immutable
// after construction. Zero columns are rejected by default because the
// form-based modules assume nonzero dual forms; matroid-level callers can
// opt in via allow_zero_columns.
template <class F>
struct LinearCode {
  F field;
  Matrix<F> gen;
  bool allow_zero_columns = false;

  std::size_t n() const { return gen.cols(); }
  std::size_t k() const { return gen.rows(); }
};

template <class F>
LinearCode<F> make_code(F field, std::vector<std::vector<typename F::elem>> rows,
                        bool allow_zero_columns = false) {
  auto gen = Matrix<F>::from_rows(field, std::move(rows));
  if (gen.rows() > gen.cols())
    fail(errc::rank_deficient, "k > n forces a rank-deficient generator");
  if (rank_of(gen) != gen.rows())
    fail(errc::rank_deficient, "generator rows are linearly dependent");
  if (!allow_zero_columns) {
    for (std::size_t c = 0; c < gen.cols(); ++c)
      if (gen.column_is_zero(c))
        fail(errc::zero_column, "generator column " + std::to_string(c) + " is zero");
  }
  return {field, std::move(gen), allow_zero_columns};
}

template <class F>
std::size_t weight(const F& field, const std::vector<typename F::elem>& w) {
  if constexpr (std::is_same_v<F, Gfp>) {
    (void)field;
    return kernels::count_nonzero(w.data(), w.size());
  } else {
    std::size_t n = 0;
    for (const auto& x : w) n += !field.is_zero(x);
    return n;
  }
}

struct BruteResult {
  std::size_t d = 0;
  std::uint64_t projective_count = 0;
  // weight_distribution[w] = number of codewords of weight w, all q^k counted
  std::vector<std::uint64_t> weight_distribution;
};

constexpr std::uint64_t kDefaultEnumBudget = 10'000'000;

namespace detail {

inline std::optional<std::uint64_t> checked_pow(std::uint64_t q, std::size_t k,
                                                std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > limit / q) return std::nullopt;
    r *= q;
  }
  return r;
}

// Walks all q^k messages as a base-q odometer; each step increments one digit
// by 1 mod q (a wrap from q-1 to 0 is also +1 mod q), so the codeword update
// is one generator-row addition per changed digit.
template <class F, class Visit>
void enumerate_codewords(const LinearCode<F>& c, std::uint64_t q, Visit&& visit) {
  const F& field = c.field;
  std::size_t n = c.n(), k = c.k();
  std::vector<typename F::elem> cw(n, field.zero());
  std::vector<std::uint64_t> digits(k, 0);
  visit(cw, digits);  // zero message
  while (true) {
    std::size_t i = 0;
    while (i < k && digits[i] == q - 1) {
      digits[i] = 0;
      detail::row_axpy(field, cw.data(), c.gen.row(i).data(), n, field.one());
      ++i;
    }
    if (i == k) break;
    ++digits[i];
    detail::row_axpy(field, cw.data(), c.gen.row(i).data(), n, field.one());
    visit(cw, digits);
  }
}

inline BruteResult brute_generic(const LinearCode<Gfp>& c) {
  const Gfp& field = c.field;
  std::size_t n = c.n();
  BruteResult res;
  res.weight_distribution.assign(n + 1, 0);
  enumerate_codewords(c, field.modulus(),
                      [&](const std::vector<Gfp::elem>& cw, const std::vector<std::uint64_t>&) {
                        ++res.weight_distribution[weight(field, cw)];
                      });
  res.d = n + 1;
  for (std::size_t w = 1; w <= n; ++w) {
    if (res.weight_distribution[w]) {
      res.d = w;
      break;
    }
  }
  res.projective_count = res.weight_distribution[res.d] / (field.modulus() - 1);
  return res;
}

// GF(2) fast path: generator rows packed into 64-bit words, messages walked
// in Gray-code order so each step is one XOR plus a popcount.
inline BruteResult brute_packed_gf2(const LinearCode<Gfp>& c) {
  std::size_t n = c.n(), k = c.k();
  std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(k, std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < n; ++j)
      if (c.gen.at(r, j)) rows[r][j / 64] |= std::uint64_t(1) << (j % 64);

  BruteResult res;
  res.weight_distribution.assign(n + 1, 0);
  std::vector<std::uint64_t> cw(words, 0);
  ++res.weight_distribution[0];
  std::uint64_t total = std::uint64_t(1) << k;
  for (std::uint64_t s = 1; s < total; ++s) {
    std::size_t flip = static_cast<std::size_t>(std::countr_zero(s));
    kernels::xor_inplace(cw.data(), rows[flip].data(), words);
    ++res.weight_distribution[kernels::popcount(cw.data(), words)];
  }
  res.d = n + 1;
  for (std::size_t w = 1; w <= n; ++w) {
    if (res.weight_distribution[w]) {
      res.d = w;
      break;
    }
  }
  res.projective_count = res.weight_distribution[res.d];
  return res;
}

}  // namespace detail

// Exhaustive minimum distance over a finite field: q^k codeword enumeration.
inline BruteResult min_distance_brute(const LinearCode<Gfp>& c,
                                      std::uint64_t budget = kDefaultEnumBudget) {
  std::uint64_t q = c.field.modulus();
  auto total = detail::checked_pow(q, c.k(), budget);
  if (!total)
    fail(errc::budget_exceeded, "q^k exceeds enumeration budget of " + std::to_string(budget));
  if (q == 2 && c.k() < 64) return detail::brute_packed_gf2(c);
  return detail::brute_generic(c);
}

inline BruteResult min_distance_brute(const LinearCode<Rationals>&,
                                      std::uint64_t = kDefaultEnumBudget) {
  fail(errc::unsupported_field, "codeword enumeration requires a finite field");
}

// First message (odometer order) whose codeword has minimum weight; the
// corresponding projective point is where the n-d vanishing forms meet.
inline std::vector<Gfp::elem> first_min_weight_message(const LinearCode<Gfp>& c,
                                                       std::uint64_t budget = kDefaultEnumBudget) {
  std::uint64_t q = c.field.modulus();
  auto total = detail::checked_pow(q, c.k(), budget);
  if (!total)
    fail(errc::budget_exceeded, "q^k exceeds enumeration budget of " + std::to_string(budget));
  std::size_t d = min_distance_brute(c, budget).d;
  const Gfp& field = c.field;
  std::vector<Gfp::elem> best;
  detail::enumerate_codewords(
      c, q, [&](const std::vector<Gfp::elem>& cw, const std::vector<std::uint64_t>& digits) {
        if (best.empty() && weight(field, cw) == d)
          best.assign(digits.begin(), digits.end());
      });
  return best;
}

template <class F>
LinearCode<F> dual(const LinearCode<F>& c) {
  if (c.k() == c.n()) fail(errc::zero_dual, "full-dimension code has a zero dual");
  auto basis = kernel_basis(c.gen);
  return make_code(c.field, std::move(basis), /*allow_zero_columns=*/true);
}

template <class F>
LinearCode<F> puncture(const LinearCode<F>& c, std::size_t i) {
  if (i >= c.n()) throw std::invalid_argument("column index out of range");
  std::vector<std::vector<typename F::elem>> rows(c.k());
  for (std::size_t r = 0; r < c.k(); ++r)
    for (std::size_t j = 0; j < c.n(); ++j)
      if (j != i) rows[r].push_back(c.gen.at(r, j));
  auto m = Matrix<F>::from_rows(c.field, rows);
  if (rank_of(m) != c.k())
    fail(errc::coloop_puncture, "column " + std::to_string(i) + " is a coloop");
  return {c.field, std::move(m), c.allow_zero_columns};
}

namespace detail {

// Row operations turning column i into (0,...,0,1)^T; the row space is
// unchanged. Requires a nonzero column.
template <class F>
void column_to_last_unit(Matrix<F>& m, std::size_t i) {
  const F& field = m.field();
  std::size_t piv = 0;
  while (field.is_zero(m.at(piv, i))) ++piv;
  auto inv = field.inv(m.at(piv, i));
  detail::row_scale(field, m.row(piv).data(), m.cols(), inv);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r == piv || field.is_zero(m.at(r, i))) continue;
    auto f = field.neg(m.at(r, i));
    detail::row_axpy(field, m.row(r).data(), m.row(piv).data(), m.cols(), f);
  }
  if (piv != m.rows() - 1) std::swap(m.row(piv), m.row(m.rows() - 1));
}

}  // namespace detail

// Row-reduce so column i becomes (0,...,0,1)^T, then drop the last row and
// column i.
template <class F>
LinearCode<F> shorten(const LinearCode<F>& c, std::size_t i) {
  if (i >= c.n()) throw std::invalid_argument("column index out of range");
  if (c.gen.column_is_zero(i)) fail(errc::zero_column, "cannot shorten at a zero column");
  if (c.k() < 2) fail(errc::dimension_underflow, "shortening a k=1 code");
  const F& field = c.field;
  Matrix<F> m = c.gen;
  detail::column_to_last_unit(m, i);
  std::vector<std::vector<typename F::elem>> rows(c.k() - 1);
  for (std::size_t r = 0; r + 1 < c.k(); ++r)
    for (std::size_t j = 0; j < c.n(); ++j)
      if (j != i) rows[r].push_back(m.at(r, j));
  // a column proportional to column i becomes zero here; the restriction is
  // still a valid code, so the result always permits zero columns
  return make_code(field, std::move(rows), /*allow_zero_columns=*/true);
}

// Canonical lift of a GF(p) code to the rationals (residues 0..p-1).
inline LinearCode<Rationals> lift_to_q(const LinearCode<Gfp>& c) {
  Rationals qf;
  std::vector<std::vector<mpq_class>> rows(c.k());
  for (std::size_t r = 0; r < c.k(); ++r)
    for (std::size_t j = 0; j < c.n(); ++j)
      rows[r].push_back(qf.from_int(static_cast<long long>(c.gen.at(r, j))));
  return make_code(qf, std::move(rows), c.allow_zero_columns);
}

}  // namespace mindist
