#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mindist/codefile.hpp"

namespace mindist {

struct MethodResult {
  std::string name;
  std::string status;          // "ok" | "error: ..." | "skipped: ..."
  std::optional<long long> d;  // set when the method determines the distance
  nlohmann::json extra;

  bool operator==(const MethodResult&) const = default;
};

struct BoundResult {
  std::string name;
  long long value = 0;
  // Absent when the bound is not comparable to the code's own distance
  // (e.g. computed over a lifted field) or no exact method succeeded.
  std::optional<bool> satisfied;
  std::string note;

  bool operator==(const BoundResult&) const = default;
};

struct Report {
  std::size_t n = 0, k = 0;
  std::string field;
  std::vector<MethodResult> methods;
  std::vector<BoundResult> bounds;
  std::string verdict;  // "ok" | "method-disagreement" | "bound-violated"
  std::map<std::string, double> timings_ms;

  bool same_results(const Report& other) const {  // everything but timings
    return n == other.n && k == other.k && field == other.field && methods == other.methods &&
           bounds == other.bounds && verdict == other.verdict;
  }
};

struct ReportOptions {
  std::set<std::string> methods;  // empty = all; selectors: brute tutte afold
                                  // alpha-fitt binary mds ot inverse
  std::uint64_t enum_budget = 10'000'000;
  std::size_t subset_budget = 22;
  std::size_t max_rows = 200000;
  std::uint32_t betti_prime = 32003;
};

Report run_report(const AnyCode& code, const ReportOptions& opts = {});

nlohmann::json to_json(const Report& rep);
Report report_from_json(const nlohmann::json& j);
std::string format_text(const Report& rep);

// 0 ok, 2 method disagreement, 3 violated bound.
int exit_code_for(const Report& rep);

}  // namespace mindist
