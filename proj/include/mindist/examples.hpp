#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mindist/field.hpp"

namespace mindist {

// Built-in generator matrices. The field is the default the CLI uses for
// that example; methods with characteristic preconditions lift to Q on
// their own.
struct NamedExample {
  std::string name;
  FieldSpec field;
  std::vector<std::vector<long long>> rows;
  std::string note;
};

// Handles the fixed names plus the parameterized rep-<n> and id-<k>.
std::optional<NamedExample> find_example(const std::string& name);

// Display rows for `list-examples`.
std::vector<NamedExample> builtin_examples();

}  // namespace mindist
