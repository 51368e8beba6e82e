#pragma once

#include <bit>
#include <cstddef>
#include <limits>
#include <type_traits>
#include <vector>

#include "mindist/field.hpp"
#include "mindist/kernels.hpp"

namespace mindist {

namespace detail {

// dst[i] += c * src[i]; the GF(p) case routes through the dispatched kernel.
template <class F>
void row_axpy(const F& field, typename F::elem* dst, const typename F::elem* src, std::size_t len,
              const typename F::elem& c) {
  if constexpr (std::is_same_v<F, Gfp>) {
    kernels::axpy_mod(dst, src, len, c, field.modulus());
  } else {
    for (std::size_t i = 0; i < len; ++i) dst[i] = field.add(dst[i], field.mul(c, src[i]));
  }
}

template <class F>
void row_scale(const F& field, typename F::elem* dst, std::size_t len, const typename F::elem& c) {
  if constexpr (std::is_same_v<F, Gfp>) {
    kernels::scale_mod(dst, len, c, field.modulus());
  } else {
    for (std::size_t i = 0; i < len; ++i) dst[i] = field.mul(c, dst[i]);
  }
}

}  // namespace detail

template <class F>
class Matrix {
 public:
  using elem = typename F::elem;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols),
        m_(rows, std::vector<elem>(cols, field.zero())) {}

  static Matrix from_rows(F field, std::vector<std::vector<elem>> rows) {
    if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
    std::size_t cols = rows[0].size();
    for (const auto& r : rows)
      if (r.size() != cols) throw std::invalid_argument("ragged matrix rows");
    Matrix m(field, rows.size(), cols);
    m.m_ = std::move(rows);
    return m;
  }

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.m_[i][i] = field.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field() const { return field_; }

  elem& at(std::size_t r, std::size_t c) { return m_[r][c]; }
  const elem& at(std::size_t r, std::size_t c) const { return m_[r][c]; }
  std::vector<elem>& row(std::size_t r) { return m_[r]; }
  const std::vector<elem>& row(std::size_t r) const { return m_[r]; }

  std::vector<elem> column(std::size_t c) const {
    std::vector<elem> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(m_[r][c]);
    return out;
  }

  bool column_is_zero(std::size_t c) const {
    for (std::size_t r = 0; r < rows_; ++r)
      if (!field_.is_zero(m_[r][c])) return false;
    return true;
  }

  bool equal(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!field_.eq(m_[r][c], other.m_[r][c])) return false;
    return true;
  }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<std::vector<elem>> m_;
};

template <class F>
struct RrefResult {
  std::size_t rank;
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form with deterministic pivoting: leftmost nonzero
// column, first eligible row. Eliminates above and below the pivot.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  const F& field = m.field();
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
    std::size_t piv = pr;
    while (piv < m.rows() && field.is_zero(m.at(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != pr) std::swap(m.row(piv), m.row(pr));
    auto inv = field.inv(m.at(pr, c));
    detail::row_scale(field, m.row(pr).data() + c, m.cols() - c, inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pr || field.is_zero(m.at(r, c))) continue;
      auto f = field.neg(m.at(r, c));
      detail::row_axpy(field, m.row(r).data() + c, m.row(pr).data() + c, m.cols() - c, f);
    }
    pivots.push_back(c);
    ++pr;
  }
  return {pivots.size(), std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank_of(const Matrix<F>& m) {
  return rref(m).rank;
}

// Basis of the right kernel, one vector per free column in increasing column
// order, each normalized so its first nonzero entry is 1.
template <class F>
std::vector<std::vector<typename F::elem>> kernel_basis(const Matrix<F>& m) {
  const F& field = m.field();
  auto res = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : res.pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::elem>> basis;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<typename F::elem> v(m.cols(), field.zero());
    v[fc] = field.one();
    for (std::size_t i = 0; i < res.pivots.size(); ++i)
      v[res.pivots[i]] = field.neg(res.reduced.at(i, fc));
    // normalize leading coefficient to 1
    for (auto& x : v) {
      if (!field.is_zero(x)) {
        auto inv = field.inv(x);
        for (auto& y : v) y = field.mul(inv, y);
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Incrementally maintained row span: rows are kept in echelon form (unique
// pivots, leading coefficient 1) and reduce() is the workhorse behind every
// graded dimension computed in this project.
template <class F>
class RowBasis {
 public:
  using elem = typename F::elem;
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  RowBasis(F field, std::size_t cols)
      : field_(field), cols_(cols), row_at_col_(cols, -1) {}

  // Fully reduces v in place against the basis (the residual is zero at
  // every pivot column, so this is the projection along the span); returns
  // the leading column of the residual, or npos when v lies in the span.
  std::size_t reduce(std::vector<elem>& v) const {
    std::size_t lead = npos;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (field_.is_zero(v[c])) continue;
      int r = row_at_col_[c];
      if (r >= 0) {
        auto f = field_.neg(v[c]);
        detail::row_axpy(field_, v.data() + c, rows_[r].data() + c, cols_ - c, f);
      } else if (lead == npos) {
        lead = c;
      }
    }
    return lead;
  }

  // Returns true when v enlarges the span.
  bool insert(std::vector<elem> v) {
    std::size_t c = reduce(v);
    if (c == npos) return false;
    auto inv = field_.inv(v[c]);
    detail::row_scale(field_, v.data() + c, cols_ - c, inv);
    row_at_col_[c] = static_cast<int>(rows_.size());
    pivots_.push_back(c);
    rows_.push_back(std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool full() const { return rows_.size() == cols_; }
  const std::vector<std::vector<elem>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const F& field() const { return field_; }

 private:
  F field_;
  std::size_t cols_;
  std::vector<std::vector<elem>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<int> row_at_col_;
};

// Packed GF(2) row span over bit columns; used where rows are truth tables
// or codeword masks and the u32 representation would be wasteful.
class Gf2RowBasis {
 public:
  explicit Gf2RowBasis(std::size_t bits)
      : bits_(bits), words_((bits + 63) / 64) {}

  bool insert(std::vector<std::uint64_t> v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::size_t p = pivots_[i];
      if (v[p / 64] >> (p % 64) & 1) kernels::xor_inplace(v.data(), rows_[i].data(), words_);
    }
    for (std::size_t w = 0; w < words_; ++w) {
      if (v[w] == 0) continue;
      std::size_t p = w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
      if (p >= bits_) break;
      pivots_.push_back(p);
      rows_.push_back(std::move(v));
      return true;
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t bits_, words_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace mindist
