#include "mindist/orlik_terao.hpp"

namespace mindist {

// Koszul slice bookkeeping. For the differential d_i : K_i -> K_{i-1} in
// internal degree j, the domain is spanned by e_T (x) m with |T| = i and m a
// degree-(j-i) monomial; the induced rank on S/I coefficients is the rank of
// the image rows after reducing each block modulo the degree-(j-i+1) slice
// of I. The reduction is a linear projection killing exactly the I-block, so
// beta_{i,j} = dim K_{i,j} - rank d_{i,j} - rank d_{i+1,j}.
struct BettiEngine::Impl {
  OTIdeal<Gfp> ideal;
  Gfp field;
  std::size_t n;
  GradedBudget budget;

  std::map<std::size_t, MonomialTable> tables;
  std::map<std::size_t, RowBasis<Gfp>> islices;
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> subsets;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> dranks;

  Impl(OTIdeal<Gfp> i, GradedBudget b)
      : ideal(std::move(i)), field(ideal.field), n(ideal.nvars), budget(b) {
    if (n > 8)
      fail(errc::budget_exceeded,
           "Koszul homology limited to 8 variables, got " + std::to_string(n));
  }

  const MonomialTable& table(std::size_t t) {
    auto it = tables.find(t);
    if (it != tables.end()) return it->second;
    return tables.emplace(t, MonomialTable(static_cast<int>(n), static_cast<int>(t)))
        .first->second;
  }

  const std::vector<std::vector<std::size_t>>& subsets_of(std::size_t s) {
    auto it = subsets.find(s);
    if (it != subsets.end()) return it->second;
    return subsets.emplace(s, combinations(n, s)).first->second;
  }

  // Reduced spanning rows of I_t.
  const RowBasis<Gfp>& ideal_slice(std::size_t t) {
    auto it = islices.find(t);
    if (it != islices.end()) return it->second;
    if (t > budget.max_degree)
      fail(errc::budget_exceeded, "degree " + std::to_string(t) + " exceeds the degree budget");
    const auto& tab = table(t);
    RowBasis<Gfp> basis(field, tab.size());
    long long rows = 0;
    for (const auto& g : ideal.gens) {
      int dg = g.degree();
      if (dg < 0 || static_cast<std::size_t>(dg) > t) continue;
      rows += binom(n - 1 + (t - dg), n - 1);
    }
    if (rows > static_cast<long long>(budget.max_rows))
      fail(errc::budget_exceeded, "ideal slice needs " + std::to_string(rows) + " rows");
    for (const auto& g : ideal.gens) {
      int dg = g.degree();
      if (dg < 0 || static_cast<std::size_t>(dg) > t) continue;
      for (const auto& m :
           monomials_of_degree(static_cast<int>(n), static_cast<int>(t) - dg)) {
        basis.insert(g.times_monomial(m).dense_row(tab));
        if (basis.full()) break;
      }
      if (basis.full()) break;
    }
    return islices.emplace(t, std::move(basis)).first->second;
  }

  std::size_t dim_s(long long t) {
    return t < 0 ? 0 : static_cast<std::size_t>(binom(n - 1 + t, n - 1));
  }
  std::size_t dim_si(long long t) {
    if (t < 0) return 0;
    return dim_s(t) - ideal_slice(static_cast<std::size_t>(t)).rank();
  }

  std::size_t rank_d(std::size_t i, std::size_t j) {
    if (i < 1 || i > n || j < i) return 0;
    auto key = std::pair{i, j};
    auto it = dranks.find(key);
    if (it != dranks.end()) return it->second;

    std::size_t td = j - i, tc = td + 1;
    std::size_t result = 0;
    if (dim_si(static_cast<long long>(td)) == 0) {
      dranks.emplace(key, 0);
      return 0;
    }
    const auto& subs_dom = subsets_of(i);
    const auto& subs_cod = subsets_of(i - 1);
    std::map<std::vector<std::size_t>, std::size_t> cod_index;
    for (std::size_t b = 0; b < subs_cod.size(); ++b) cod_index.emplace(subs_cod[b], b);
    const auto& tab_d = table(td);
    const auto& tab_c = table(tc);
    const auto& ired = ideal_slice(tc);

    long long rows = static_cast<long long>(subs_dom.size()) * tab_d.size();
    std::size_t width = subs_cod.size() * tab_c.size();
    if (rows > static_cast<long long>(budget.max_rows) ||
        width > budget.max_rows)
      fail(errc::budget_exceeded, "Koszul slice needs " + std::to_string(rows) + " x " +
                                      std::to_string(width));

    std::size_t cap = subs_cod.size() * dim_si(static_cast<long long>(tc));
    RowBasis<Gfp> image(field, width);
    std::vector<std::size_t> blocks;
    for (const auto& sub : subs_dom) {
      for (const auto& m : tab_d.mons) {
        std::vector<Gfp::elem> row(width, 0);
        blocks.clear();
        for (std::size_t l = 0; l < sub.size(); ++l) {
          std::vector<std::size_t> rest;
          rest.reserve(sub.size() - 1);
          for (std::size_t l2 = 0; l2 < sub.size(); ++l2)
            if (l2 != l) rest.push_back(sub[l2]);
          std::size_t b = cod_index.at(rest);
          auto e = m;
          ++e[sub[l]];
          Gfp::elem sign = (l % 2 == 0) ? field.one() : field.neg(field.one());
          row[b * tab_c.size() + tab_c.index.at(e)] = sign;
          blocks.push_back(b);
        }
        // reduce each touched block modulo I_{tc}
        for (auto b : blocks) {
          std::vector<Gfp::elem> seg(row.begin() + b * tab_c.size(),
                                     row.begin() + (b + 1) * tab_c.size());
          ired.reduce(seg);
          std::copy(seg.begin(), seg.end(), row.begin() + b * tab_c.size());
        }
        image.insert(std::move(row));
        if (image.rank() == cap) break;
      }
      if (image.rank() == cap) break;
    }
    result = image.rank();
    dranks.emplace(key, result);
    return result;
  }

  std::size_t entry(std::size_t i, std::size_t j) {
    if (i > n) return 0;
    std::size_t k_dim = static_cast<std::size_t>(binom(n, i)) *
                        dim_si(static_cast<long long>(j) - static_cast<long long>(i));
    if (k_dim == 0) return 0;
    long long b = static_cast<long long>(k_dim) - static_cast<long long>(rank_d(i, j)) -
                  static_cast<long long>(rank_d(i + 1, j));
    if (b < 0) throw std::logic_error("Koszul ranks exceed slice dimension");
    return static_cast<std::size_t>(b);
  }
};

BettiEngine::BettiEngine(OTIdeal<Gfp> ideal, GradedBudget budget)
    : impl_(std::make_unique<Impl>(std::move(ideal), budget)) {}

BettiEngine::~BettiEngine() = default;
BettiEngine::BettiEngine(BettiEngine&&) noexcept = default;

std::size_t BettiEngine::nvars() const { return impl_->n; }

std::size_t BettiEngine::entry(std::size_t i, std::size_t j) { return impl_->entry(i, j); }

BettiTable BettiEngine::table(std::size_t max_i, std::size_t max_j) {
  BettiTable out;
  out.nvars = impl_->n;
  out.max_i = max_i;
  out.max_j = max_j;
  for (std::size_t i = 0; i <= max_i; ++i) {
    for (std::size_t j = 0; j <= max_j; ++j) {
      std::size_t b = entry(i, j);
      if (b) out.entries.emplace(std::pair{i, j}, b);
    }
  }
  return out;
}

}  // namespace mindist
