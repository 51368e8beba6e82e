#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mindist/code.hpp"

namespace mindist {

// Element of F2[y_1..y_n]/(y_i^2 - y_i), stored as its evaluation table over
// the 2^n points of F2^n (the ring is a product of 2^n copies of F2, so
// addition is XOR and multiplication is AND, pointwise). Bit i of a point
// index is the value of y_{i+1}.
class BoolFn {
 public:
  explicit BoolFn(std::size_t n);
  // Linear form sum of y_i over set bits of coef_mask.
  static BoolFn linear(std::size_t n, std::uint64_t coef_mask);
  // Squarefree monomial: product of y_i over set bits of var_mask.
  static BoolFn monomial(std::size_t n, std::uint64_t var_mask);

  std::size_t n() const { return n_; }
  std::size_t points() const { return std::size_t(1) << n_; }
  bool eval(std::uint64_t point) const;
  void set(std::uint64_t point, bool v);

  BoolFn& operator^=(const BoolFn& other);
  BoolFn& operator&=(const BoolFn& other);
  bool is_zero() const;
  std::uint64_t count_ones() const;
  const std::vector<std::uint64_t>& words() const { return bits_; }
  std::vector<std::uint64_t>& words() { return bits_; }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> bits_;
};

constexpr std::size_t kBoolBudgetN = 16;
constexpr std::size_t kBoolProductBudgetN = 12;

// The n-k dual-generator rows as linear functions on F2^n; their common zero
// set is exactly the code.
std::vector<BoolFn> relation_forms(const LinearCode<Gfp>& c);

// dim of the ideal generated by gens: 2^n minus the common zero count. In a
// product of fields an ideal is cut out by its zero set.
std::size_t ideal_dim(const std::vector<BoolFn>& gens, std::size_t n);
// Independent route: GF(2) rank of the span of all generator multiples.
std::size_t ideal_dim_rank(const std::vector<BoolFn>& gens, std::size_t n);

// True iff F(C) + I(Y,a) is the irrelevant ideal; holds exactly for a <= d.
bool prop_check(const LinearCode<Gfp>& c, std::size_t a);

struct GrDims {
  // dims[i] = dim gr_i of the I(Y,.)-filtration on S/F(C); equals the number
  // of codewords of weight n-i.
  std::vector<std::uint64_t> dims;
};

GrDims gr_dims(const LinearCode<Gfp>& c);

struct GrJumps {
  // top_jump = max{0 <= i <= n-1 : dims[i] != 0} = n - d.
  std::size_t top_jump;
  // The literal "smallest positive i with dims[i] != 0" reading; reported
  // alongside because the two readings differ on e.g. Hamming [7,4].
  std::optional<std::size_t> literal_alpha_positive;
};

GrJumps gr_jump_indices(const LinearCode<Gfp>& c);

// F_a * F_b subset of F_{a+b} for the filtration F_a = I(Y, n-a), checked
// exhaustively over generator pairs.
bool filtration_product_check(std::size_t n, std::size_t a, std::size_t b);

}  // namespace mindist
