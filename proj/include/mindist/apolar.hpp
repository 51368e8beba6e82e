#pragma once

#include "mindist/graded.hpp"

namespace mindist {

// The differentiation action is only faithful in characteristic 0 or above
// the degree of the differentiated polynomial.
template <class F>
void require_char_gt(const F& field, std::size_t deg) {
  if constexpr (std::is_same_v<F, Gfp>) {
    if (field.modulus() <= deg)
      fail(errc::bad_characteristic, "characteristic " + std::to_string(field.modulus()) +
                                         " must exceed " + std::to_string(deg));
  } else {
    (void)field;
    (void)deg;
  }
}

// cf(C) = product of all dual forms, homogeneous of degree n.
template <class F>
MultiPoly<F> chow_form(const FormSet<F>& fs) {
  auto p = MultiPoly<F>::constant(fs.field, static_cast<int>(fs.k), fs.field.one());
  for (const auto& f : fs.forms) {
    auto lf = MultiPoly<F>::linear_form(fs.field, f);
    if (lf.is_zero()) fail(errc::zero_form, "Chow form of a zero linear form");
    p = p * lf;
  }
  return p;
}

// Apply the operator prod_j d_j^{e_j}; each term picks up the falling
// factorial of its exponents.
template <class F>
MultiPoly<F> apply_derivative(const MultiPoly<F>& p, const std::vector<int>& e) {
  const F& field = p.field();
  MultiPoly<F> out(field, p.nvars());
  for (const auto& [a, c] : p.terms()) {
    bool ok = true;
    for (int j = 0; j < p.nvars(); ++j)
      if (a[j] < e[j]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    auto coeff = c;
    std::vector<int> shifted(p.nvars());
    for (int j = 0; j < p.nvars(); ++j) {
      for (int s = 0; s < e[j]; ++s) coeff = field.mul(coeff, field.from_int(a[j] - s));
      shifted[j] = a[j] - e[j];
    }
    out.add_term(std::move(shifted), std::move(coeff));
  }
  return out;
}

// Rank of the span of all order-i partial derivatives of P. This is
// HF(apolar algebra, i) by Macaulay duality.
template <class F>
std::size_t deriv_span_dim(const MultiPoly<F>& p, std::size_t order) {
  int deg = p.degree();
  if (deg < 0) return 0;
  require_char_gt(p.field(), static_cast<std::size_t>(deg));
  if (static_cast<int>(order) > deg) return 0;
  int k = p.nvars();
  MonomialTable table(k, deg - static_cast<int>(order));
  RowBasis<F> basis(p.field(), table.size());
  for (const auto& e : monomials_of_degree(k, static_cast<int>(order))) {
    basis.insert(apply_derivative(p, e).dense_row(table));
    if (basis.full()) break;
  }
  return basis.rank();
}

// hf[i] = dim span of order-i derivatives, i = 0..deg(P).
template <class F>
std::vector<std::size_t> apolar_hilbert(const MultiPoly<F>& p) {
  int deg = p.degree();
  std::vector<std::size_t> hf;
  for (int i = 0; i <= deg; ++i) hf.push_back(deriv_span_dim(p, static_cast<std::size_t>(i)));
  return hf;
}

// Smallest i with a derivative-span defect, i.e. alpha(Ann(P)).
template <class F>
std::size_t alpha_ann(const MultiPoly<F>& p) {
  int k = p.nvars();
  int deg = p.degree();
  for (std::size_t i = 0;; ++i) {
    std::size_t dim = static_cast<int>(i) > deg ? 0 : deriv_span_dim(p, i);
    if (dim < static_cast<std::size_t>(binom(k - 1 + static_cast<long long>(i), k - 1))) return i;
  }
}

// Gorenstein symmetry of the apolar Hilbert function.
template <class F>
bool symmetry_check(const MultiPoly<F>& p) {
  auto hf = apolar_hilbert(p);
  std::size_t r = hf.size();
  for (std::size_t i = 0; i < r; ++i)
    if (hf[i] != hf[r - 1 - i]) return false;
  return true;
}

// The lower bound d >= alpha(Ann(cf(C))) - 1.
template <class F>
std::size_t inverse_bound(const LinearCode<F>& c) {
  require_char_gt(c.field, c.n());
  auto cf = chow_form(dual_forms(c));
  return alpha_ann(cf) - 1;
}

template <class F>
MultiPoly<F> directional_derivative(const MultiPoly<F>& p,
                                    const std::vector<typename F::elem>& q) {
  const F& field = p.field();
  MultiPoly<F> out(field, p.nvars());
  std::vector<int> e(p.nvars(), 0);
  for (int j = 0; j < p.nvars(); ++j) {
    if (field.is_zero(q[j])) continue;
    e[j] = 1;
    auto dj = apply_derivative(p, e);
    e[j] = 0;
    for (const auto& [a, coeff] : dj.terms()) out.add_term(a, field.mul(q[j], coeff));
  }
  return out;
}

// True iff (sum_j q_j d_j)^order annihilates the Chow form. With Q the
// common point of the n-d forms vanishing on a minimum-weight codeword,
// order d+1 always vanishes.
template <class F>
bool codeword_derivative_vanishes(const LinearCode<F>& c,
                                  const std::vector<typename F::elem>& point,
                                  std::size_t order) {
  require_char_gt(c.field, c.n());
  auto fs = dual_forms(c);
  std::size_t vanishing = 0;
  for (const auto& f : fs.forms) {
    auto v = c.field.zero();
    for (std::size_t j = 0; j < fs.k; ++j) v = c.field.add(v, c.field.mul(f[j], point[j]));
    vanishing += c.field.is_zero(v);
  }
  // with a single form there is no intersection to speak of; the check is
  // meaningful from n = 2 on
  if (c.n() >= 2 && vanishing < 2)
    fail(errc::not_an_intersection_point,
         "only " + std::to_string(vanishing) + " forms vanish at the point");
  auto p = chow_form(fs);
  for (std::size_t s = 0; s < order && !p.is_zero(); ++s) p = directional_derivative(p, point);
  return p.is_zero();
}

// A projective point where n-d forms meet: the first minimum-weight message.
inline std::vector<Gfp::elem> find_min_weight_point(const LinearCode<Gfp>& c,
                                                    std::uint64_t budget = kDefaultEnumBudget) {
  return first_min_weight_message(c, budget);
}

}  // namespace mindist
