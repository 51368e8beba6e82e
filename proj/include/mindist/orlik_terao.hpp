#pragma once

#include <memory>
#include <optional>
#include <set>

#include "mindist/graded.hpp"

namespace mindist {

// The Orlik-Terao ideal presented by one generator per circuit:
// del(a_1 y_{i_1} + ... + a_u y_{i_u}) = sum_j a_j y_{i_1}...^y_{i_j}...y_{i_u}.
template <class F>
struct OTIdeal {
  F field;
  std::size_t nvars = 0;
  std::vector<MultiPoly<F>> gens;
  std::vector<std::vector<std::size_t>> supports;

  // generator degree -> count (degree = circuit size - 1)
  std::map<std::size_t, std::size_t> degrees() const {
    std::map<std::size_t, std::size_t> out;
    for (const auto& g : gens) ++out[static_cast<std::size_t>(g.degree())];
    return out;
  }
};

namespace detail {

template <class F>
bool columns_proportional(const F& field, const std::vector<typename F::elem>& a,
                          const std::vector<typename F::elem>& b) {
  // both nonzero; proportional iff a_i b_j = a_j b_i for all i, j
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!field.eq(field.mul(a[i], b[j]), field.mul(a[j], b[i]))) return false;
  return true;
}

}  // namespace detail

template <class F>
void require_ot_preconditions(const LinearCode<F>& c) {
  for (std::size_t j = 0; j < c.n(); ++j)
    if (c.gen.column_is_zero(j))
      fail(errc::zero_column, "column " + std::to_string(j) + " is zero");
  for (std::size_t i = 0; i < c.n(); ++i)
    for (std::size_t j = i + 1; j < c.n(); ++j)
      if (detail::columns_proportional(c.field, c.gen.column(i), c.gen.column(j)))
        fail(errc::proportional_columns,
             "columns " + std::to_string(i) + " and " + std::to_string(j) + " are proportional");
}

template <class F>
OTIdeal<F> ot_generators(const LinearCode<F>& c) {
  require_ot_preconditions(c);
  OTIdeal<F> ideal{c.field, c.n(), {}, {}};
  for (const auto& circ : circuits(c)) {
    std::size_t u = circ.support.size();
    MultiPoly<F> g(c.field, static_cast<int>(c.n()));
    for (std::size_t j = 0; j < u; ++j) {
      std::vector<int> e(c.n(), 0);
      for (std::size_t l = 0; l < u; ++l)
        if (l != j) e[circ.support[l]] = 1;
      g.add_term(std::move(e), circ.coeffs[j]);
    }
    ideal.gens.push_back(std::move(g));
    ideal.supports.push_back(circ.support);
  }
  return ideal;
}

// alpha(IOT) = girth - 1 (minimal generator degree).
template <class F>
std::size_t alpha_iot(const LinearCode<F>& c) {
  require_ot_preconditions(c);
  auto g = girth(c);
  if (!g) fail(errc::zero_ideal, "free column matroid has a zero Orlik-Terao ideal");
  return *g - 1;
}

inline OTIdeal<Gfp> reduce_mod(const OTIdeal<Rationals>& ideal, std::uint32_t p) {
  Gfp field(p);
  OTIdeal<Gfp> out{field, ideal.nvars, {}, ideal.supports};
  for (const auto& g : ideal.gens) {
    MultiPoly<Gfp> r(field, g.nvars());
    for (const auto& [e, cq] : g.terms()) r.add_term(e, field.from_mpq(cq));
    out.gens.push_back(std::move(r));
  }
  return out;
}

inline OTIdeal<Gfp> ot_over_prime(const OTIdeal<Gfp>& ideal, std::uint32_t) { return ideal; }
inline OTIdeal<Gfp> ot_over_prime(const OTIdeal<Rationals>& ideal, std::uint32_t p) {
  return reduce_mod(ideal, p);
}

struct BettiTable {
  std::size_t nvars = 0;
  std::size_t max_i = 0, max_j = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> entries;  // nonzero only

  std::size_t at(std::size_t i, std::size_t j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  bool in_bounds(std::size_t i, std::size_t j) const { return i <= max_i && j <= max_j; }
};

// beta_{i,j}(S/I) from the degree-j slices of the Koszul complex of the
// variables tensored with S/I; exact ranks over GF(p), no Groebner bases.
class BettiEngine {
 public:
  explicit BettiEngine(OTIdeal<Gfp> ideal, GradedBudget budget = {});
  ~BettiEngine();
  BettiEngine(BettiEngine&&) noexcept;

  std::size_t nvars() const;
  std::size_t entry(std::size_t i, std::size_t j);
  BettiTable table(std::size_t max_i, std::size_t max_j);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

inline BettiTable graded_betti(const OTIdeal<Gfp>& ideal, std::size_t max_i, std::size_t max_j,
                               GradedBudget budget = {}) {
  return BettiEngine(ideal, budget).table(max_i, max_j);
}

// delta = length of the consecutive linear strand of the ideal, read off
// beta_{i+1, alpha+i}(S/I).
inline std::size_t linear_strand_length(const BettiTable& b, std::size_t alpha) {
  std::size_t delta = 0;
  for (std::size_t i = 0;; ++i) {
    std::size_t bi = i + 1, bj = alpha + i;
    if (bi > b.nvars) return delta;  // projective dimension is at most nvars
    if (!b.in_bounds(bi, bj))
      fail(errc::insufficient_bounds, "linear strand runs past the computed window");
    if (b.at(bi, bj) == 0) return delta;
    delta = i;
  }
}

// With s three-element supports covering t indices, 3s < 2t rules out a
// linear syzygy among the quadric generators.
inline bool no_linear_syzygy_predicate(const std::vector<std::vector<std::size_t>>& supports) {
  std::set<std::size_t> uni;
  for (const auto& s : supports) {
    if (s.size() != 3)
      fail(errc::bad_support_size, "predicate applies to 3-element supports only");
    uni.insert(s.begin(), s.end());
  }
  return 3 * supports.size() < 2 * uni.size();
}

constexpr std::uint32_t kDefaultBettiPrime = 32003;

struct OtReport {
  std::size_t n = 0;
  std::size_t alpha = 0;
  bool mds = false;                   // alpha = 3: any 3 forms independent
  std::optional<std::size_t> delta;   // alpha = 2 path
  std::optional<std::size_t> bound;   // n - delta - 3
  std::optional<std::size_t> actual_d;
  std::optional<bool> tight;
};

// The k=3 distance report: alpha(IOT)=3 certifies MDS (d = n-2); alpha=2
// yields the linear-strand lower bound d >= n - delta - 3.
template <class F>
OtReport ot_distance_report(const LinearCode<F>& c,
                            std::uint32_t betti_prime = kDefaultBettiPrime,
                            GradedBudget budget = {}) {
  if (c.k() != 3) fail(errc::wrong_dimension, "the proposition is stated for k = 3");
  auto ideal = ot_generators(c);
  if (ideal.gens.empty()) fail(errc::zero_ideal, "free column matroid");
  OtReport rep;
  rep.n = c.n();
  rep.alpha = alpha_iot(c);
  rep.actual_d = exact_distance(c);
  if (rep.alpha == 3) {
    rep.mds = true;
    return rep;
  }
  BettiEngine engine(ot_over_prime(ideal, betti_prime), budget);
  std::size_t delta = 0;
  for (std::size_t i = 0;; ++i) {
    if (i + 1 > engine.nvars()) break;
    if (engine.entry(i + 1, rep.alpha + i) == 0) break;
    delta = i;
  }
  rep.delta = delta;
  rep.bound = rep.n - delta - 3;
  rep.tight = rep.actual_d && *rep.actual_d == *rep.bound;
  return rep;
}

}  // namespace mindist
