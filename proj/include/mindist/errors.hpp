#pragma once

#include <stdexcept>
#include <string>

namespace mindist {

// Error conditions, named after the violated precondition rather than the
// call site that noticed it.
enum class errc {
  not_prime,
  rank_deficient,
  budget_exceeded,
  unsupported_field,
  zero_dual,
  coloop_puncture,
  zero_column,
  dimension_underflow,
  no_linear_term,
  bad_range,
  not_mds,
  bad_characteristic,
  not_an_intersection_point,
  zero_ideal,
  proportional_columns,
  wrong_dimension,
  bad_support_size,
  insufficient_bounds,
  zero_form,
  parse_error,
};

const char* to_string(errc e);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace mindist
