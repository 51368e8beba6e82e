#pragma once

#include <utility>

#include "mindist/matroid.hpp"
#include "mindist/poly.hpp"

namespace mindist {

struct GradedBudget {
  std::size_t max_rows = 200000;
  std::size_t max_degree = 12;
};

// Linear forms in k variables; deletion and restriction produce form sets
// that are not full-rank codes, so the graded machinery works on these.
template <class F>
struct FormSet {
  F field;
  std::size_t k = 0;
  std::vector<std::vector<typename F::elem>> forms;

  std::size_t size() const { return forms.size(); }
};

// The forms dual to the generator columns: coeffs(l_i) = column i of G.
template <class F>
FormSet<F> dual_forms(const LinearCode<F>& c) {
  FormSet<F> fs{c.field, c.k(), {}};
  for (std::size_t j = 0; j < c.n(); ++j) {
    if (c.gen.column_is_zero(j))
      fail(errc::zero_column, "column " + std::to_string(j) + " gives a zero form");
    fs.forms.push_back(c.gen.column(j));
  }
  return fs;
}

// Degreewise spans of the a-fold product ideals I(C,a), memoized per (a,t).
// Fitting-ideal conventions: I(C,a) = R for a <= 0 and 0 for a > n.
template <class F>
class GradedProducts {
 public:
  GradedProducts(FormSet<F> fs, GradedBudget budget = {})
      : fs_(std::move(fs)), budget_(budget) {
    for (const auto& f : fs_.forms)
      form_polys_.push_back(MultiPoly<F>::linear_form(fs_.field, f));
  }

  std::size_t k() const { return fs_.k; }
  std::size_t nforms() const { return fs_.size(); }
  const FormSet<F>& forms() const { return fs_; }

  std::size_t full_dim(long long t) const {
    return t < 0 ? 0 : static_cast<std::size_t>(binom(fs_.k - 1 + t, fs_.k - 1));
  }

  // dim I(C,a)_t
  std::size_t dim(long long a, long long t) {
    if (t < 0) return 0;
    if (a <= 0) return full_dim(t);
    if (a > static_cast<long long>(nforms())) return 0;
    if (t < a) return 0;
    return slice(static_cast<std::size_t>(a), static_cast<std::size_t>(t)).rank();
  }

  // Reduced spanning rows of I(C,a)_t over the degree-t monomial basis.
  const RowBasis<F>& slice(std::size_t a, std::size_t t) {
    auto key = std::pair{a, t};
    auto it = slices_.find(key);
    if (it != slices_.end()) return it->second;

    if (t > budget_.max_degree)
      fail(errc::budget_exceeded, "degree " + std::to_string(t) + " exceeds the degree budget " +
                                      std::to_string(budget_.max_degree));
    const auto& table = monomial_table(t);
    long long rows = binom(nforms(), a) * binom(fs_.k - 1 + t - a, fs_.k - 1);
    if (rows > static_cast<long long>(budget_.max_rows))
      fail(errc::budget_exceeded, "afold slice needs " + std::to_string(rows) + " rows");

    RowBasis<F> basis(fs_.field, table.size());
    const auto& mults = monomials_of_degree(static_cast<int>(fs_.k), static_cast<int>(t - a));
    for (const auto& g : products(a)) {
      for (const auto& m : mults) {
        basis.insert(g.times_monomial(m).dense_row(table));
        if (basis.full()) break;
      }
      if (basis.full()) break;
    }
    return slices_.emplace(key, std::move(basis)).first->second;
  }

  const MonomialTable& monomial_table(std::size_t t) {
    auto it = tables_.find(t);
    if (it != tables_.end()) return it->second;
    return tables_.emplace(t, MonomialTable(static_cast<int>(fs_.k), static_cast<int>(t)))
        .first->second;
  }

  // All a-fold products l_{i_1}...l_{i_a}, combinations in lex order,
  // expanded via shared prefix products.
  const std::vector<MultiPoly<F>>& products(std::size_t a) {
    auto it = products_.find(a);
    if (it != products_.end()) return it->second;
    std::vector<MultiPoly<F>> out;
    auto rec = [&](auto&& self, std::size_t start, std::size_t remaining,
                   const MultiPoly<F>& cur) -> void {
      if (remaining == 0) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i + remaining <= nforms(); ++i)
        self(self, i + 1, remaining - 1, cur * form_polys_[i]);
    };
    rec(rec, 0, a, MultiPoly<F>::constant(fs_.field, static_cast<int>(fs_.k), fs_.field.one()));
    return products_.emplace(a, std::move(out)).first->second;
  }

 private:
  FormSet<F> fs_;
  GradedBudget budget_;
  std::vector<MultiPoly<F>> form_polys_;
  std::map<std::size_t, std::vector<MultiPoly<F>>> products_;
  std::map<std::pair<std::size_t, std::size_t>, RowBasis<F>> slices_;
  std::map<std::size_t, MonomialTable> tables_;
};

// dim I(C,a)_t for a standalone form set.
template <class F>
std::size_t afold_dim(const FormSet<F>& fs, long long a, long long t, GradedBudget budget = {}) {
  GradedProducts<F> gp(fs, budget);
  return gp.dim(a, t);
}

// Largest a with I(C,a)_a = m^a_a; comparing in degree a suffices because
// both ideals are generated there.
template <class F>
std::size_t distance_via_afold_cached(GradedProducts<F>& gp) {
  for (std::size_t a = 1; a <= gp.nforms(); ++a)
    if (gp.dim(a, a) != gp.full_dim(a)) return a - 1;
  return gp.nforms();
}

template <class F>
std::size_t distance_via_afold(const LinearCode<F>& c, GradedBudget budget = {}) {
  GradedProducts<F> gp(dual_forms(c), budget);
  return distance_via_afold_cached(gp);
}

// Smallest t >= 1 where some component (m I(C,j) / I(C,j+1))_t is nonzero,
// i.e. dim R_1*I(C,j)_{t-1} > dim I(C,j+1)_t. Equals d+1.
template <class F>
std::size_t alpha_m_fitt_cached(GradedProducts<F>& gp) {
  const F& field = gp.forms().field;
  std::size_t k = gp.k(), n = gp.nforms();
  for (std::size_t t = 1; t <= n + 1; ++t) {
    for (std::size_t j = 0; j < t; ++j) {
      std::size_t lhs;
      if (j == 0) {
        lhs = gp.full_dim(t);  // R_1 * R_{t-1} = R_t
      } else if (j > n || t - 1 < j) {
        lhs = 0;
      } else {
        const auto& base = gp.slice(j, t - 1);
        const auto& tab_t = gp.monomial_table(t);
        const auto& tab_tm1 = gp.monomial_table(t - 1);
        RowBasis<F> span(field, tab_t.size());
        for (const auto& row : base.rows()) {
          for (std::size_t var = 0; var < k && !span.full(); ++var) {
            std::vector<typename F::elem> shifted(tab_t.size(), field.zero());
            for (std::size_t c0 = 0; c0 < row.size(); ++c0) {
              if (field.is_zero(row[c0])) continue;
              auto e = tab_tm1.mons[c0];
              ++e[var];
              shifted[tab_t.index.at(e)] = row[c0];
            }
            span.insert(std::move(shifted));
          }
          if (span.full()) break;
        }
        lhs = span.rank();
      }
      std::size_t rhs = gp.dim(static_cast<long long>(j) + 1, static_cast<long long>(t));
      if (lhs > rhs) return t;
    }
  }
  throw std::logic_error("alpha(m Fitt) not found below n+2; contract violated");
}

template <class F>
std::size_t alpha_m_fitt(const LinearCode<F>& c, GradedBudget budget = {}) {
  GradedProducts<F> gp(dual_forms(c), budget);
  return alpha_m_fitt_cached(gp);
}

// dim P(C)_{u,v}: group the products l_I by (u, v) = (rank of complementary
// columns, n - |I|) and take each group's span in degree n - v.
template <class F>
std::map<std::pair<std::size_t, std::size_t>, std::size_t> p_dims(
    const LinearCode<F>& c, std::size_t subset_budget = kDefaultSubsetBudget) {
  std::size_t n = c.n(), k = c.k();
  if (n > subset_budget)
    fail(errc::budget_exceeded, "P(C) decomposition needs 2^" + std::to_string(n) + " subsets");
  const F& field = c.field;

  // rank of every column subset
  std::vector<std::uint8_t> rank_of_mask(std::size_t(1) << n, 0);
  {
    RowBasis<F> empty(field, k);
    auto rec = [&](auto&& self, std::size_t col, const RowBasis<F>& basis,
                   std::size_t mask) -> void {
      if (col == n) {
        rank_of_mask[mask] = static_cast<std::uint8_t>(basis.rank());
        return;
      }
      self(self, col + 1, basis, mask);
      RowBasis<F> with = basis;
      with.insert(c.gen.column(col));
      self(self, col + 1, with, mask | (std::size_t(1) << col));
    };
    rec(rec, 0, empty, 0);
  }

  std::vector<MultiPoly<F>> form_polys;
  for (std::size_t j = 0; j < n; ++j)
    form_polys.push_back(MultiPoly<F>::linear_form(field, c.gen.column(j)));
  std::vector<MonomialTable> tables;
  for (std::size_t t = 0; t <= n; ++t) tables.emplace_back(static_cast<int>(k), static_cast<int>(t));

  std::map<std::pair<std::size_t, std::size_t>, RowBasis<F>> groups;
  const std::size_t all = (std::size_t(1) << n) - 1;
  auto rec = [&](auto&& self, std::size_t col, const MultiPoly<F>& prod, std::size_t mask,
                 std::size_t sz) -> void {
    if (col == n) {
      std::size_t u = rank_of_mask[all & ~mask];
      std::size_t v = n - sz;
      auto key = std::pair{u, v};
      auto it = groups.find(key);
      if (it == groups.end())
        it = groups.emplace(key, RowBasis<F>(field, tables[sz].size())).first;
      it->second.insert(prod.dense_row(tables[sz]));
      return;
    }
    self(self, col + 1, prod, mask, sz);
    self(self, col + 1, prod * form_polys[col], mask | (std::size_t(1) << col), sz + 1);
  };
  rec(rec, 0, MultiPoly<F>::constant(field, static_cast<int>(k), field.one()), 0, 0);

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for (const auto& [key, basis] : groups)
    if (basis.rank() > 0) out.emplace(key, basis.rank());
  return out;
}

// Berget's formula: T(x,y) = sum (x-1)^{k-u} y^{v-u} dim P(C)_{u,v}.
template <class F>
TuttePoly tutte_via_berget(const LinearCode<F>& c,
                           std::size_t subset_budget = kDefaultSubsetBudget) {
  auto dims = p_dims(c, subset_budget);
  std::size_t k = c.k();
  TuttePoly t;
  for (const auto& [uv, dim] : dims) {
    auto [u, v] = uv;
    long long a = static_cast<long long>(k - u);
    int ydeg = static_cast<int>(v - u);
    for (long long i = 0; i <= a; ++i) {
      long long sign = ((a - i) % 2 == 0) ? 1 : -1;
      t.add(static_cast<int>(i), ydeg, sign * binom(a, i) * static_cast<long long>(dim));
    }
  }
  return t;
}

// dim_K (Fitt(C) tensor K) = 1 + sum_j dim I(C,j)_j.
template <class F>
std::size_t fitt_tensor_total_dim(const LinearCode<F>& c, GradedBudget budget = {}) {
  GradedProducts<F> gp(dual_forms(c), budget);
  std::size_t total = 1;
  for (std::size_t j = 1; j <= c.n(); ++j) total += gp.dim(j, j);
  return total;
}

// Power-series coefficients of HS(R/I_{V_c}, t) =
// (sum_{u=0}^{n-c} binom(c-1+u, c-1) t^u) / (1-t)^{k-c}, up to degree t_max.
inline std::vector<long long> star_hs_coeffs(std::size_t n, std::size_t k, std::size_t c,
                                             std::size_t t_max) {
  if (c < 1 || c > k - 1)
    fail(errc::bad_range, "star configuration codimension must satisfy 1 <= c <= k-1");
  std::vector<long long> out(t_max + 1, 0);
  for (std::size_t t = 0; t <= t_max; ++t) {
    long long s = 0;
    for (std::size_t u = 0; u <= std::min<std::size_t>(n - c, t); ++u)
      s += binom(c - 1 + u, c - 1) * binom(k - c - 1 + (t - u), k - c - 1);
    out[t] = s;
  }
  return out;
}

// For an MDS code, I(C,j) equals the star configuration ideal I_{V_{n-j+1}}
// for j = d+1..n; checks the Hilbert function against the closed form.
template <class F>
bool mds_star_check(const LinearCode<F>& c, std::size_t t_max = 8, GradedBudget budget = {}) {
  if (!is_mds(c)) fail(errc::not_mds, "star configuration identity requires an MDS code");
  std::size_t n = c.n(), k = c.k();
  GradedProducts<F> gp(dual_forms(c), budget);
  for (std::size_t j = n - k + 2; j <= n; ++j) {
    auto series = star_hs_coeffs(n, k, n - j + 1, t_max);
    for (std::size_t t = 0; t <= t_max; ++t) {
      long long hf = static_cast<long long>(gp.full_dim(t)) -
                     static_cast<long long>(gp.dim(j, t));
      if (hf != series[t]) return false;
    }
  }
  return true;
}

namespace detail {

// Normalized deletion/restriction data at the last column.
template <class F>
struct DelRes {
  FormSet<F> full;         // forms of C with l_n = x_k
  FormSet<F> deletion;     // first n-1 forms, k variables
  FormSet<F> restriction;  // first n-1 forms with x_k = 0, k-1 variables
};

template <class F>
DelRes<F> deletion_restriction(const LinearCode<F>& c) {
  Matrix<F> m = c.gen;
  std::size_t last = m.cols() - 1;
  if (m.column_is_zero(last)) fail(errc::zero_column, "cannot normalize a zero last column");
  column_to_last_unit(m, last);
  DelRes<F> dr{FormSet<F>{c.field, c.k(), {}}, FormSet<F>{c.field, c.k(), {}},
               FormSet<F>{c.field, c.k() - 1, {}}};
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto col = m.column(j);
    dr.full.forms.push_back(col);
    if (j == last) continue;
    dr.deletion.forms.push_back(col);
    col.pop_back();  // x_k = 0
    dr.restriction.forms.push_back(std::move(col));
  }
  return dr;
}

// Appends the degree-t slice rows of I(forms, a), optionally multiplied by
// x_k, into basis (columns indexed by table).
template <class F>
void insert_slice_rows(RowBasis<F>& basis, GradedProducts<F>& gp, long long a, long long t,
                       bool times_xk, const MonomialTable& table, const GradedBudget& budget) {
  if (t < 0 || a > static_cast<long long>(gp.nforms())) return;
  long long rows = binom(gp.nforms(), std::max(a, 0ll)) *
                   binom(gp.k() - 1 + t - std::max(a, 0ll), gp.k() - 1);
  if (rows > static_cast<long long>(budget.max_rows))
    fail(errc::budget_exceeded, "slice comparison needs " + std::to_string(rows) + " rows");
  const F& field = gp.forms().field;
  std::size_t k = gp.k();
  std::vector<int> xk(k, 0);
  xk[k - 1] = 1;
  auto emit = [&](const MultiPoly<F>& p) {
    basis.insert((times_xk ? p.times_monomial(xk) : p).dense_row(table));
  };
  if (a <= 0) {
    for (const auto& m : monomials_of_degree(static_cast<int>(k), static_cast<int>(t))) {
      MultiPoly<F> p(field, static_cast<int>(k));
      p.add_term(m, field.one());
      emit(p);
    }
    return;
  }
  if (t < a) return;
  const auto& mults = monomials_of_degree(static_cast<int>(k), static_cast<int>(t - a));
  for (const auto& g : gp.products(static_cast<std::size_t>(a)))
    for (const auto& m : mults) emit(g.times_monomial(m));
}

}  // namespace detail

// Degree-t span equality of I(C,a) = x_k I(C',a-1) + I(C',a) after
// normalizing the last column to x_k.
template <class F>
bool delres_identity_check(const LinearCode<F>& c, std::size_t a, std::size_t t,
                           GradedBudget budget = {}) {
  if (a < 1) fail(errc::bad_range, "deletion identity needs a >= 1");
  if (t > budget.max_degree)
    fail(errc::budget_exceeded, "degree " + std::to_string(t) + " exceeds the degree budget");
  auto dr = detail::deletion_restriction(c);
  GradedProducts<F> gp_full(dr.full, budget);
  GradedProducts<F> gp_del(dr.deletion, budget);
  const auto& table = gp_full.monomial_table(t);

  RowBasis<F> lhs(c.field, table.size());
  detail::insert_slice_rows(lhs, gp_full, a, t, false, table, budget);

  RowBasis<F> rhs(c.field, table.size());
  detail::insert_slice_rows(rhs, gp_del, static_cast<long long>(a) - 1,
                            static_cast<long long>(t) - 1, true, table, budget);
  detail::insert_slice_rows(rhs, gp_del, a, t, false, table, budget);

  RowBasis<F> joint = lhs;
  for (const auto& row : rhs.rows()) joint.insert(row);

  return lhs.rank() == rhs.rank() && rhs.rank() == joint.rank();
}

// Graded-dimension form of the MDS short exact sequence
// 0 -> Fitt(C')(-1) -> Fitt(C) -> Fitt(C'') -> 0:
// dim(I_a/I_{a+1})_t = dim(I'_{a-1}/I'_a)_{t-1} + dim(I''_a/I''_{a+1})_t.
template <class F>
bool ses_dim_check(const LinearCode<F>& c, std::size_t a, std::size_t t,
                   GradedBudget budget = {}) {
  if (!is_mds(c)) fail(errc::not_mds, "the Fitting sequence requires an MDS code");
  if (c.k() < 2) throw std::invalid_argument("restriction needs k >= 2");
  auto dr = detail::deletion_restriction(c);
  GradedProducts<F> gp_full(dr.full, budget);
  GradedProducts<F> gp_del(dr.deletion, budget);
  GradedProducts<F> gp_res(dr.restriction, budget);
  long long la = static_cast<long long>(a), lt = static_cast<long long>(t);
  long long lhs = static_cast<long long>(gp_full.dim(la, lt)) -
                  static_cast<long long>(gp_full.dim(la + 1, lt));
  long long rhs1 = static_cast<long long>(gp_del.dim(la - 1, lt - 1)) -
                   static_cast<long long>(gp_del.dim(la, lt - 1));
  long long rhs2 = static_cast<long long>(gp_res.dim(la, lt)) -
                   static_cast<long long>(gp_res.dim(la + 1, lt));
  return lhs == rhs1 + rhs2;
}

}  // namespace mindist
