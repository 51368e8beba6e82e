#include "mindist/report.hpp"

#include <chrono>
#include <sstream>

#include "mindist/apolar.hpp"
#include "mindist/boolfn.hpp"
#include "mindist/orlik_terao.hpp"

namespace mindist {

namespace {

using steady = std::chrono::steady_clock;

double ms_since(steady::time_point t0) {
  return std::chrono::duration<double, std::milli>(steady::now() - t0).count();
}

struct MethodRunner {
  Report& rep;
  const ReportOptions& opts;

  bool wanted(const std::string& selector) const {
    return opts.methods.empty() || opts.methods.count(selector) > 0;
  }

  template <class Body>
  void run(const std::string& selector, const std::string& name, Body&& body) {
    if (!wanted(selector)) return;
    MethodResult r{name, "ok", std::nullopt, nlohmann::json::object()};
    auto t0 = steady::now();
    try {
      body(r);
    } catch (const std::exception& e) {
      r.status = std::string("error: ") + e.what();
      r.d.reset();
    }
    rep.timings_ms[name] = ms_since(t0);
    rep.methods.push_back(std::move(r));
  }
};

template <class F>
void run_all_methods(const LinearCode<F>& c, const ReportOptions& opts, Report& rep) {
  MethodRunner mr{rep, opts};
  GradedBudget gb{opts.max_rows};

  mr.run("brute", "brute", [&](MethodResult& r) {
    if constexpr (std::is_same_v<F, Gfp>) {
      auto b = min_distance_brute(c, opts.enum_budget);
      r.d = static_cast<long long>(b.d);
      r.extra["projective_count"] = b.projective_count;
      r.extra["weight_distribution"] = b.weight_distribution;
    } else {
      r.status = "skipped: enumeration requires a finite field";
    }
  });

  mr.run("tutte", "tutte", [&](MethodResult& r) {
    auto t = tutte(c, opts.subset_budget);
    auto td = distance_from_tutte(t, c.n(), c.k());
    r.d = static_cast<long long>(td.d);
    r.extra["projective_count"] = td.projective_count;
    r.extra["polynomial"] = t.str();
  });

  mr.run("afold", "afold", [&](MethodResult& r) {
    r.d = static_cast<long long>(distance_via_afold(c, gb));
  });

  mr.run("alpha-fitt", "alpha-fitt", [&](MethodResult& r) {
    std::size_t alpha = alpha_m_fitt(c, gb);
    r.extra["alpha"] = alpha;
    r.d = static_cast<long long>(alpha) - 1;
  });

  mr.run("binary", "binary-prop", [&](MethodResult& r) {
    if constexpr (std::is_same_v<F, Gfp>) {
      if (c.field.modulus() != 2) {
        r.status = "skipped: field is not F2";
        return;
      }
      std::size_t last_true = 0;
      for (std::size_t a = 1; a <= c.n(); ++a) {
        if (!prop_check(c, a)) break;
        last_true = a;
      }
      r.d = static_cast<long long>(last_true);
    } else {
      r.status = "skipped: field is not F2";
    }
  });

  mr.run("binary", "binary-gr", [&](MethodResult& r) {
    if constexpr (std::is_same_v<F, Gfp>) {
      if (c.field.modulus() != 2) {
        r.status = "skipped: field is not F2";
        return;
      }
      auto dims = gr_dims(c);
      auto jumps = gr_jump_indices(c);
      r.extra["gr_dims"] = dims.dims;
      r.extra["top_jump"] = jumps.top_jump;
      if (jumps.literal_alpha_positive)
        r.extra["literal_alpha_positive"] = *jumps.literal_alpha_positive;
      r.d = static_cast<long long>(c.n() - jumps.top_jump);
    } else {
      r.status = "skipped: field is not F2";
    }
  });

  mr.run("mds", "mds", [&](MethodResult& r) {
    bool mds = is_mds(c);
    r.extra["is_mds"] = mds;
    if (mds) r.d = static_cast<long long>(c.n() - c.k() + 1);
  });

  mr.run("ot", "ot", [&](MethodResult& r) {
    if (c.k() != 3) {
      r.status = "skipped: k != 3";
      return;
    }
    auto ot = ot_distance_report(c, opts.betti_prime, gb);
    r.extra["alpha_iot"] = ot.alpha;
    if (ot.mds) {
      r.d = static_cast<long long>(ot.n - 2);
      r.extra["mds"] = true;
    } else {
      r.extra["delta"] = *ot.delta;
      r.extra["bound"] = *ot.bound;
      if (ot.actual_d) r.extra["actual_d"] = *ot.actual_d;
      rep.bounds.push_back({"ot-strand", static_cast<long long>(*ot.bound), std::nullopt, ""});
    }
  });

  mr.run("inverse", "inverse", [&](MethodResult& r) {
    long long value = 0;
    std::string note;
    if constexpr (std::is_same_v<F, Gfp>) {
      if (c.field.modulus() > c.n()) {
        value = static_cast<long long>(inverse_bound(c));
      } else {
        value = static_cast<long long>(inverse_bound(lift_to_q(c)));
        note = "computed over Q via canonical lift; bounds the lifted code";
        r.extra["lifted"] = true;
      }
    } else {
      value = static_cast<long long>(inverse_bound(c));
    }
    r.extra["bound"] = value;
    rep.bounds.push_back({"inverse", value, std::nullopt, note});
  });
}

void finish_report(Report& rep) {
  std::optional<long long> consensus;
  bool disagree = false;
  for (const auto& m : rep.methods) {
    if (m.status != "ok" || !m.d) continue;
    if (!consensus)
      consensus = m.d;
    else if (*consensus != *m.d)
      disagree = true;
  }
  for (auto& b : rep.bounds) {
    if (!b.note.empty()) continue;  // not comparable (lifted field)
    if (consensus) b.satisfied = b.value <= *consensus;
  }
  bool violated = false;
  for (const auto& b : rep.bounds)
    if (b.satisfied && !*b.satisfied) violated = true;
  rep.verdict = disagree ? "method-disagreement" : violated ? "bound-violated" : "ok";
}

}  // namespace

Report run_report(const AnyCode& code, const ReportOptions& opts) {
  Report rep;
  rep.n = code_n(code);
  rep.k = code_k(code);
  rep.field = code_field(code).name();
  with_code(code, [&](const auto& c) { run_all_methods(c, opts, rep); });
  finish_report(rep);
  return rep;
}

nlohmann::json to_json(const Report& rep) {
  nlohmann::json j;
  j["code"] = {{"n", rep.n}, {"k", rep.k}, {"field", rep.field}};
  j["methods"] = nlohmann::json::array();
  for (const auto& m : rep.methods) {
    nlohmann::json jm{{"name", m.name}, {"status", m.status}, {"extra", m.extra}};
    jm["d"] = m.d ? nlohmann::json(*m.d) : nlohmann::json(nullptr);
    j["methods"].push_back(std::move(jm));
  }
  j["bounds"] = nlohmann::json::array();
  for (const auto& b : rep.bounds) {
    nlohmann::json jb{{"name", b.name}, {"value", b.value}};
    jb["satisfied"] = b.satisfied ? nlohmann::json(*b.satisfied) : nlohmann::json(nullptr);
    if (!b.note.empty()) jb["note"] = b.note;
    j["bounds"].push_back(std::move(jb));
  }
  j["verdict"] = rep.verdict;
  j["timings_ms"] = rep.timings_ms;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report rep;
  rep.n = j.at("code").at("n").get<std::size_t>();
  rep.k = j.at("code").at("k").get<std::size_t>();
  rep.field = j.at("code").at("field").get<std::string>();
  for (const auto& jm : j.at("methods")) {
    MethodResult m;
    m.name = jm.at("name").get<std::string>();
    m.status = jm.at("status").get<std::string>();
    if (!jm.at("d").is_null()) m.d = jm.at("d").get<long long>();
    m.extra = jm.at("extra");
    rep.methods.push_back(std::move(m));
  }
  for (const auto& jb : j.at("bounds")) {
    BoundResult b;
    b.name = jb.at("name").get<std::string>();
    b.value = jb.at("value").get<long long>();
    if (!jb.at("satisfied").is_null()) b.satisfied = jb.at("satisfied").get<bool>();
    if (jb.contains("note")) b.note = jb.at("note").get<std::string>();
    rep.bounds.push_back(std::move(b));
  }
  rep.verdict = j.at("verdict").get<std::string>();
  rep.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
  return rep;
}

std::string format_text(const Report& rep) {
  std::ostringstream out;
  out << "code: [" << rep.n << "," << rep.k << "] over " << rep.field << "\n";
  for (const auto& m : rep.methods) {
    out << "  " << m.name << ": ";
    if (m.status != "ok") {
      out << m.status;
    } else if (m.d) {
      out << "d = " << *m.d;
    } else {
      out << "ok";
    }
    if (!m.extra.empty()) out << "  " << m.extra.dump();
    out << "\n";
  }
  for (const auto& b : rep.bounds) {
    out << "  bound " << b.name << ": " << b.value;
    if (b.satisfied) out << (*b.satisfied ? " (satisfied)" : " (VIOLATED)");
    if (!b.note.empty()) out << "  [" << b.note << "]";
    out << "\n";
  }
  out << "verdict: " << rep.verdict << "\n";
  return out.str();
}

int exit_code_for(const Report& rep) {
  if (rep.verdict == "method-disagreement") return 2;
  if (rep.verdict == "bound-violated") return 3;
  return 0;
}

}  // namespace mindist
