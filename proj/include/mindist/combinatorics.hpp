#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace mindist {

// Exact binomial coefficient; arguments stay desk-scale here so int64 suffices.
inline std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Visits all s-element subsets of {0,...,n-1} in lexicographic order.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t s, Fn&& fn) {
  if (s > n) return;
  std::vector<std::size_t> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    fn(const_cast<const std::vector<std::size_t>&>(idx));
    if (s == 0) return;
    std::size_t i = s;
    while (i-- > 0) {
      if (idx[i] + (s - i) < n) {
        ++idx[i];
        for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t s) {
  std::vector<std::vector<std::size_t>> out;
  for_each_combination(n, s, [&](const std::vector<std::size_t>& c) { out.push_back(c); });
  return out;
}

// Exponent vectors of total degree t in k variables, lexicographically ascending.
inline std::vector<std::vector<int>> monomials_of_degree(int k, int t) {
  std::vector<std::vector<int>> out;
  if (k <= 0 || t < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == k - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      cur[pos] = e;
      self(self, pos + 1, rem - e);
    }
  };
  rec(rec, 0, t);
  return out;
}

// Degree-t monomial basis with an exponent -> column lookup.
struct MonomialTable {
  std::vector<std::vector<int>> mons;
  std::map<std::vector<int>, std::size_t> index;

  MonomialTable() = default;
  MonomialTable(int k, int t) : mons(monomials_of_degree(k, t)) {
    for (std::size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], i);
  }
  std::size_t size() const { return mons.size(); }
};

}  // namespace mindist
