#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mindist/combinatorics.hpp"
#include "mindist/field.hpp"

namespace mindist {

// Sparse multivariate polynomial: exponent vector -> nonzero coefficient,
// lexicographic term order. Used for dual-form products, Chow forms and
// Orlik-Terao generators; sizes stay desk-scale so a std::map is fine.
template <class F>
class MultiPoly {
 public:
  using elem = typename F::elem;
  using exponents = std::vector<int>;

  MultiPoly(F field, int nvars) : field_(field), nvars_(nvars) {}

  static MultiPoly constant(F field, int nvars, elem c) {
    MultiPoly p(field, nvars);
    p.add_term(exponents(nvars, 0), std::move(c));
    return p;
  }

  static MultiPoly linear_form(F field, const std::vector<elem>& coeffs) {
    MultiPoly p(field, static_cast<int>(coeffs.size()));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (field.is_zero(coeffs[j])) continue;
      exponents e(coeffs.size(), 0);
      e[j] = 1;
      p.terms_.emplace(std::move(e), coeffs[j]);
    }
    return p;
  }

  void add_term(exponents e, elem c) {
    if (field_.is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(std::move(e), c);
    if (!fresh) {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  const std::map<exponents, elem>& terms() const { return terms_; }
  int nvars() const { return nvars_; }
  const F& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }

  // Total degree of the highest term; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int t = 0;
      for (int x : e) t += x;
      d = std::max(d, t);
    }
    return d;
  }

  MultiPoly operator*(const MultiPoly& other) const {
    MultiPoly out(field_, nvars_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : other.terms_) {
        exponents e(nvars_);
        for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(std::move(e), field_.mul(ca, cb));
      }
    }
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  MultiPoly times_monomial(const exponents& m) const {
    MultiPoly out(field_, nvars_);
    for (const auto& [e, c] : terms_) {
      exponents shifted(nvars_);
      for (int i = 0; i < nvars_; ++i) shifted[i] = e[i] + m[i];
      out.terms_.emplace(std::move(shifted), c);
    }
    return out;
  }

  // Coefficient row over a homogeneous monomial basis; terms of other degrees
  // must not be present.
  std::vector<elem> dense_row(const MonomialTable& table) const {
    std::vector<elem> row(table.size(), field_.zero());
    for (const auto& [e, c] : terms_) row[table.index.at(e)] = c;
    return row;
  }

  // Evaluate at a point.
  elem eval(const std::vector<elem>& x) const {
    elem s = field_.zero();
    for (const auto& [e, c] : terms_) {
      elem t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int a = 0; a < e[i]; ++a) t = field_.mul(t, x[i]);
      s = field_.add(s, t);
    }
    return s;
  }

  bool equal(const MultiPoly& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    auto it = other.terms_.begin();
    for (const auto& [e, c] : terms_) {
      if (e != it->first || !field_.eq(c, it->second)) return false;
      ++it;
    }
    return true;
  }

  std::string str(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) out << " + ";
      first = false;
      out << field_.str(c);
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        out << "*" << vars[i];
        if (e[i] > 1) out << "^" << e[i];
      }
    }
    return out.str();
  }

 private:
  F field_;
  int nvars_;
  std::map<exponents, elem> terms_;
};

}  // namespace mindist
