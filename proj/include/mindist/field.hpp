#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "mindist/errors.hpp"

namespace mindist {

bool is_prime_u32(std::uint32_t n);

// Runtime description of a coefficient domain, e.g. parsed from "F7" or "Q".
struct FieldSpec {
  enum class Kind { prime, rationals };
  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  std::string name() const {
    return kind == Kind::rationals ? std::string("Q") : "F" + std::to_string(p);
  }
  bool operator==(const FieldSpec&) const = default;
};

// "Q" or "F<p>"; NotPrime when p is composite.
FieldSpec make_field(std::string_view spec);

// GF(p), elements stored as canonical residues in [0, p).
class Gfp {
 public:
  using elem = std::uint32_t;
  static constexpr bool is_rationals = false;

  explicit Gfp(std::uint32_t p) : p_(p) {
    if (!is_prime_u32(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
  }

  std::uint32_t modulus() const { return p_; }
  FieldSpec spec() const { return {FieldSpec::Kind::prime, p_}; }

  elem zero() const { return 0; }
  elem one() const { return 1; }
  bool is_zero(elem a) const { return a == 0; }
  bool eq(elem a, elem b) const { return a == b; }

  elem add(elem a, elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  elem sub(elem a, elem b) const { return a >= b ? a - b : a + p_ - b; }
  elem neg(elem a) const { return a == 0 ? 0 : p_ - a; }
  elem mul(elem a, elem b) const {
    return static_cast<elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  elem inv(elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<elem>(t);
  }
  elem div(elem a, elem b) const { return mul(a, inv(b)); }

  elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<elem>(r);
  }
  elem from_mpq(const mpq_class& q) const {
    mpz_class num = q.get_num() % p_;
    mpz_class den = q.get_den() % p_;
    if (den == 0) throw std::domain_error("denominator divisible by modulus");
    elem n = from_int(num.get_si());
    elem d = from_int(den.get_si());
    return div(n, d);
  }

  std::string str(elem a) const { return std::to_string(a); }

  bool operator==(const Gfp&) const = default;

 private:
  std::uint32_t p_;
};

// The rationals, exact via GMP. All arithmetic results are canonical
// (lowest terms), which keeps coefficient growth in check.
class Rationals {
 public:
  using elem = mpq_class;
  static constexpr bool is_rationals = true;

  FieldSpec spec() const { return {FieldSpec::Kind::rationals, 0}; }

  elem zero() const { return mpq_class(0); }
  elem one() const { return mpq_class(1); }
  bool is_zero(const elem& a) const { return sgn(a) == 0; }
  bool eq(const elem& a, const elem& b) const { return a == b; }

  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem neg(const elem& a) const { return -a; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  elem inv(const elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  elem div(const elem& a, const elem& b) const { return a / inv_guard(b); }

  elem from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
  elem from_fraction(long long num, long long den) const {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
  }

  std::string str(const elem& a) const { return a.get_str(); }

  bool operator==(const Rationals&) const { return true; }

 private:
  const elem& inv_guard(const elem& b) const {
    if (sgn(b) == 0) throw std::domain_error("division by zero");
    return b;
  }
};

}  // namespace mindist
