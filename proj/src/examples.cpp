#include "mindist/examples.hpp"

#include <charconv>

namespace mindist {

namespace {

const FieldSpec kF2{FieldSpec::Kind::prime, 2};
const FieldSpec kF7{FieldSpec::Kind::prime, 7};
const FieldSpec kQ{FieldSpec::Kind::rationals, 0};

std::optional<long long> parse_suffix(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
    return std::nullopt;
  long long v = 0;
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || v < 1) return std::nullopt;
  return v;
}

}  // namespace

std::vector<NamedExample> builtin_examples() {
  return {
      {"paper-g1",
       kF2,
       {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}},
       "[4,3,2] MDS code; forms (x, y, z, x+y+z)"},
      {"paper-g2",
       kF7,
       {{1, 0, 0, 1, 1}, {0, 1, 0, 1, 2}, {0, 0, 1, 1, 5}},
       "[5,3,3] MDS code; forms (x, y, z, x+y+z, x+2y+5z)"},
      {"paper-c2",
       kQ,
       {{1, 0, 1, 1, 0, 0}, {0, 1, 1, -1, 0, 1}, {0, 0, 0, 0, 1, -1}},
       "[6,3,2] code; forms (x, y, x+y, x-y, z, y-z)"},
      {"braid6",
       kQ,
       {{1, 0, 0, 1, 1, 0}, {0, 1, 0, -1, 0, 1}, {0, 0, 1, 0, -1, -1}},
       "[6,3,3] braid arrangement code; forms (x, y, z, x-y, x-z, y-z)"},
      {"hamming74",
       kF2,
       {{1, 0, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}},
       "[7,4,3] binary Hamming code"},
      {"rep-4", kF2, {{1, 1, 1, 1}}, "rep-<n>: binary repetition [n,1,n]"},
      {"id-3", kF2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, "id-<k>: identity [k,k,1]"},
  };
}

std::optional<NamedExample> find_example(const std::string& name) {
  if (auto n = parse_suffix(name, "rep-")) {
    if (*n > 62) return std::nullopt;
    return NamedExample{name, kF2, {std::vector<long long>(*n, 1)}, "binary repetition code"};
  }
  if (auto k = parse_suffix(name, "id-")) {
    if (*k > 62) return std::nullopt;
    std::vector<std::vector<long long>> rows(*k, std::vector<long long>(*k, 0));
    for (long long i = 0; i < *k; ++i) rows[i][i] = 1;
    return NamedExample{name, kF2, std::move(rows), "identity code"};
  }
  for (auto& ex : builtin_examples())
    if (ex.name == name) return ex;
  return std::nullopt;
}

}  // namespace mindist
