#pragma once

#include <string>
#include <variant>

#include "mindist/code.hpp"
#include "mindist/examples.hpp"

namespace mindist {

using AnyCode = std::variant<LinearCode<Gfp>, LinearCode<Rationals>>;

// Text format:
//   field F2        # or Q; '#' starts a comment anywhere
//   3 4             # k n
//   1 0 0 1
//   0 1 0 1
//   0 0 1 1
// Entries are integers; p/q fractions are accepted under field Q.
AnyCode parse_code_file(const std::string& text);

AnyCode code_from_example(const NamedExample& ex);

template <class Fn>
decltype(auto) with_code(const AnyCode& code, Fn&& fn) {
  return std::visit(std::forward<Fn>(fn), code);
}

inline FieldSpec code_field(const AnyCode& code) {
  return with_code(code, [](const auto& c) { return c.field.spec(); });
}

inline std::size_t code_n(const AnyCode& code) {
  return with_code(code, [](const auto& c) { return c.n(); });
}

inline std::size_t code_k(const AnyCode& code) {
  return with_code(code, [](const auto& c) { return c.k(); });
}

}  // namespace mindist
