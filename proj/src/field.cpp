#include "mindist/field.hpp"

#include <charconv>

#include "mindist/errors.hpp"

namespace mindist {

const char* to_string(errc e) {
  switch (e) {
    case errc::not_prime: return "NotPrime";
    case errc::rank_deficient: return "RankDeficient";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::unsupported_field: return "UnsupportedField";
    case errc::zero_dual: return "ZeroDual";
    case errc::coloop_puncture: return "ColoopPuncture";
    case errc::zero_column: return "ZeroColumn";
    case errc::dimension_underflow: return "DimensionUnderflow";
    case errc::no_linear_term: return "NoLinearTerm";
    case errc::bad_range: return "BadRange";
    case errc::not_mds: return "NotMDS";
    case errc::bad_characteristic: return "BadCharacteristic";
    case errc::not_an_intersection_point: return "NotAnIntersectionPoint";
    case errc::zero_ideal: return "ZeroIdeal";
    case errc::proportional_columns: return "ProportionalColumns";
    case errc::wrong_dimension: return "WrongDimension";
    case errc::bad_support_size: return "BadSupportSize";
    case errc::insufficient_bounds: return "InsufficientBounds";
    case errc::zero_form: return "ZeroForm";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec make_field(std::string_view spec) {
  if (spec == "Q") return {FieldSpec::Kind::rationals, 0};
  if (spec.size() >= 2 && spec[0] == 'F') {
    std::uint64_t p = 0;
    auto body = spec.substr(1);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size()) {
      if (p >= (1ull << 31))
        fail(errc::parse_error, "modulus too large: " + std::string(spec));
      if (!is_prime_u32(static_cast<std::uint32_t>(p)))
        fail(errc::not_prime, std::to_string(p) + " is not prime");
      return {FieldSpec::Kind::prime, static_cast<std::uint32_t>(p)};
    }
  }
  fail(errc::parse_error, "bad field spec '" + std::string(spec) + "' (expected Q or F<p>)");
}

}  // namespace mindist
