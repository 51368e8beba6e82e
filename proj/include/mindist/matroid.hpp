#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "mindist/code.hpp"
#include "mindist/combinatorics.hpp"

namespace mindist {

constexpr std::size_t kDefaultSubsetBudget = 22;

// Bivariate polynomial with integer coefficients, keyed (x-degree, y-degree).
struct TuttePoly {
  std::map<std::pair<int, int>, long long> coeff;

  long long at(int i, int j) const {
    auto it = coeff.find({i, j});
    return it == coeff.end() ? 0 : it->second;
  }
  void add(int i, int j, long long c) {
    if (c == 0) return;
    auto [it, fresh] = coeff.emplace(std::pair{i, j}, c);
    if (!fresh && (it->second += c) == 0) coeff.erase(it);
  }
  long long eval(long long x, long long y) const {
    long long s = 0;
    for (const auto& [ij, c] : coeff) {
      long long t = c;
      for (int a = 0; a < ij.first; ++a) t *= x;
      for (int b = 0; b < ij.second; ++b) t *= y;
      s += t;
    }
    return s;
  }
  bool operator==(const TuttePoly&) const = default;

  std::string str() const {
    if (coeff.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
      auto [i, j] = it->first;
      long long c = it->second;
      if (!first) out << (c < 0 ? " - " : " + ");
      else if (c < 0) out << "-";
      first = false;
      long long a = c < 0 ? -c : c;
      bool hasvar = i > 0 || j > 0;
      if (a != 1 || !hasvar) out << a;
      if (a != 1 && hasvar) out << "*";
      if (i > 0) out << "x" << (i > 1 ? "^" + std::to_string(i) : "");
      if (i > 0 && j > 0) out << "*";
      if (j > 0) out << "y" << (j > 1 ? "^" + std::to_string(j) : "");
    }
    return out.str();
  }
};

// Rank of the column set indexed by idxs (the matroid rank oracle).
template <class F>
std::size_t subset_rank(const LinearCode<F>& c, const std::vector<std::size_t>& idxs) {
  RowBasis<F> basis(c.field, c.k());
  for (auto i : idxs) basis.insert(c.gen.column(i));
  return basis.rank();
}

namespace detail {

// Tallies (rank, size) over all column subsets by branching on each column
// with an incremental elimination state; 2^n leaves, O(k^2) work per node.
template <class F>
void tutte_dfs(const LinearCode<F>& c, std::size_t col, const RowBasis<F>& basis,
               std::size_t size, std::vector<std::vector<long long>>& tally) {
  if (col == c.n()) {
    ++tally[basis.rank()][size];
    return;
  }
  tutte_dfs(c, col + 1, basis, size, tally);
  RowBasis<F> with = basis;
  with.insert(c.gen.column(col));
  tutte_dfs(c, col + 1, with, size + 1, tally);
}

}  // namespace detail

// Full 2^n subset expansion of T(x,y) = sum (x-1)^{k-r(I)} (y-1)^{|I|-r(I)}.
template <class F>
TuttePoly tutte(const LinearCode<F>& c, std::size_t subset_budget = kDefaultSubsetBudget) {
  if (c.n() > subset_budget)
    fail(errc::budget_exceeded,
         "n = " + std::to_string(c.n()) + " exceeds subset budget " + std::to_string(subset_budget));
  std::size_t n = c.n(), k = c.k();
  std::vector<std::vector<long long>> tally(k + 1, std::vector<long long>(n + 1, 0));
  RowBasis<F> empty(c.field, k);
  detail::tutte_dfs(c, 0, empty, 0, tally);
  TuttePoly t;
  for (std::size_t r = 0; r <= k; ++r) {
    for (std::size_t s = r; s <= n; ++s) {
      long long cnt = tally[r][s];
      if (cnt == 0) continue;
      long long a = static_cast<long long>(k - r), b = static_cast<long long>(s - r);
      for (long long i = 0; i <= a; ++i)
        for (long long j = 0; j <= b; ++j) {
          long long sign = ((a - i + b - j) % 2 == 0) ? 1 : -1;
          t.add(static_cast<int>(i), static_cast<int>(j), sign * cnt * binom(a, i) * binom(b, j));
        }
    }
  }
  return t;
}

struct TutteDistance {
  std::size_t d;
  long long projective_count;
};

// Shift x -> x+1 exactly; among terms x^1 y^p take the largest p. Then
// d = n - p - k + 1, and the coefficient counts projective minimum-weight
// codewords. Requires a loop-free rank-k matroid on n elements.
inline TutteDistance distance_from_tutte(const TuttePoly& t, std::size_t n, std::size_t k) {
  TuttePoly shifted;
  for (const auto& [ij, c] : t.coeff) {
    auto [i, j] = ij;
    for (int m = 0; m <= i; ++m) shifted.add(m, j, c * binom(i, m));
  }
  int best_p = -1;
  long long count = 0;
  for (const auto& [ij, c] : shifted.coeff) {
    if (ij.first != 1) continue;
    if (ij.second > best_p) {
      best_p = ij.second;
      count = c;
    }
  }
  if (best_p < 0) fail(errc::no_linear_term, "T(x+1,y) has no x^1 y^p term");
  return {n - static_cast<std::size_t>(best_p) - k + 1, count};
}

template <class F>
TutteDistance tutte_distance(const LinearCode<F>& c,
                             std::size_t subset_budget = kDefaultSubsetBudget) {
  for (std::size_t j = 0; j < c.n(); ++j)
    if (c.gen.column_is_zero(j))
      fail(errc::zero_column, "distance from Tutte requires a loop-free matroid");
  return distance_from_tutte(tutte(c, subset_budget), c.n(), c.k());
}

// A minimal dependent column set together with its dependency coefficients
// (the 1-dimensional kernel of the support submatrix, leading coefficient 1).
template <class F>
struct Circuit {
  std::vector<std::size_t> support;
  std::vector<typename F::elem> coeffs;
};

// All circuits, sorted lexicographically by support. Walks supports in
// increasing size with containment pruning; circuits have size <= k+1.
template <class F>
std::vector<Circuit<F>> circuits(const LinearCode<F>& c) {
  for (std::size_t j = 0; j < c.n(); ++j)
    if (c.gen.column_is_zero(j)) fail(errc::zero_column, "circuit enumeration assumes no loops");
  if (c.n() >= 64) fail(errc::budget_exceeded, "circuit enumeration limited to n < 64");
  std::size_t n = c.n(), k = c.k();
  std::vector<Circuit<F>> out;
  std::vector<std::uint64_t> masks;
  for (std::size_t s = 2; s <= std::min(n, k + 1); ++s) {
    for_each_combination(n, s, [&](const std::vector<std::size_t>& sub) {
      std::uint64_t m = 0;
      for (auto i : sub) m |= std::uint64_t(1) << i;
      for (auto cm : masks)
        if ((cm & m) == cm) return;
      if (subset_rank(c, sub) == s) return;
      // minimal by pruning: all proper subsets are independent
      Matrix<F> sel(c.field, k, s);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < s; ++j) sel.at(r, j) = c.gen.at(r, sub[j]);
      auto ker = kernel_basis(sel);
      Circuit<F> circ{sub, ker.at(0)};
      masks.push_back(m);
      out.push_back(std::move(circ));
    });
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.support < b.support; });
  return out;
}

// Smallest circuit size; nullopt for a free matroid.
template <class F>
std::optional<std::size_t> girth(const LinearCode<F>& c) {
  std::size_t n = c.n(), k = c.k();
  for (std::size_t j = 0; j < n; ++j)
    if (c.gen.column_is_zero(j)) return 1;  // a loop is a one-element circuit
  for (std::size_t s = 2; s <= std::min(n, k + 1); ++s) {
    bool found = false;
    for_each_combination(n, s, [&](const std::vector<std::size_t>& sub) {
      if (!found && subset_rank(c, sub) < s) found = true;
    });
    if (found) return s;
  }
  return std::nullopt;
}

// Exact distance: enumeration on finite fields within budget, the Tutte
// route otherwise (also the only exact route over Q).
inline std::size_t exact_distance(const LinearCode<Gfp>& c,
                                  std::uint64_t enum_budget = kDefaultEnumBudget,
                                  std::size_t subset_budget = kDefaultSubsetBudget) {
  if (detail::checked_pow(c.field.modulus(), c.k(), enum_budget))
    return min_distance_brute(c, enum_budget).d;
  return tutte_distance(c, subset_budget).d;
}

inline std::size_t exact_distance(const LinearCode<Rationals>& c, std::uint64_t = 0,
                                  std::size_t subset_budget = kDefaultSubsetBudget) {
  return tutte_distance(c, subset_budget).d;
}

template <class F>
bool is_mds(const LinearCode<F>& c) {
  return exact_distance(c) == c.n() - c.k() + 1;
}

}  // namespace mindist
