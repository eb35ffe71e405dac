#include "tracesign/report_io.hpp"

#include <sstream>

namespace tracesign {

using nlohmann::json;

json json_value(const IntMatrix2& m) {
  return {{"a", to_string(m.a)}, {"c", to_string(m.c)}, {"b", to_string(m.b)}, {"d", to_string(m.d)}};
}

IntMatrix2 matrix_from_json(const json& j) {
  auto entry = [&j](const char* key) -> Int {
    const auto& e = j.at(key);
    return e.is_string() ? parse_int(e.get<std::string>()) : Int{e.get<std::int64_t>()};
  };
  return {entry("a"), entry("c"), entry("b"), entry("d")};
}

namespace {

json monomial_json(Monomial m) {
  json vars = json::array();
  for (int slot = 0; slot < 32; ++slot)
    if ((m.mask >> slot) & 1u) vars.push_back(slot);
  return {{"vars", std::move(vars)}, {"text", m.to_string()}};
}

}  // namespace

json json_value(const SignPattern& p) {
  json out = {{"pattern", to_string(p.tag)}};
  if (p.is_mixed()) {
    out["positive"] = monomial_json(*p.positive_witness);
    out["negative"] = monomial_json(*p.negative_witness);
  }
  return out;
}

json json_value(const GoodnessReport& r, bool include_per_sigma) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = "goodness";
  out["k"] = r.k;
  out["terms"] = r.terms;
  out["sigma_count"] = r.per_sigma.size();
  out["all_good"] = r.all_good;
  out["sign_formula_holds"] = r.sign_formula_holds ? json(*r.sign_formula_holds) : json(nullptr);
  out["passed"] = r.passed();
  out["counts"] = {{"AllNonneg", r.count(SignTag::AllNonneg)},
                   {"AllNonpos", r.count(SignTag::AllNonpos)},
                   {"Zero", r.count(SignTag::Zero)},
                   {"Mixed", r.count(SignTag::Mixed)}};
  if (r.counterexample) {
    out["counterexample"] = {{"sigma", r.counterexample->sigma.to_string()},
                             {"sigma_mask", r.counterexample->sigma.mask()},
                             {"positive", monomial_json(r.counterexample->positive)},
                             {"negative", monomial_json(r.counterexample->negative)}};
  } else {
    out["counterexample"] = nullptr;
  }
  if (r.formula_violation) {
    out["sign_formula_violation"] = {{"sigma", r.formula_violation->sigma.to_string()},
                                     {"observed", to_string(r.formula_violation->observed)},
                                     {"expected_sign", r.formula_violation->expected}};
  }
  if (include_per_sigma) {
    json rows = json::array();
    for (std::uint32_t mask = 0; mask < r.per_sigma.size(); ++mask) {
      json row = json_value(r.per_sigma[mask]);
      row["sigma"] = SignSequence(r.k, mask).to_string();
      rows.push_back(std::move(row));
    }
    out["per_sigma"] = std::move(rows);
  }
  return out;
}

json json_value(const OracleSummary& s) {
  json mismatches = json::array();
  for (const auto& m : s.mismatches) {
    json point = json::array();
    for (Int v : m.point) point.push_back(to_string(v));
    mismatches.push_back({{"point", point}, {"oracle", to_string(m.oracle)}, {"polynomial", to_string(m.polynomial)}});
  }
  return {{"schema_version", kSchemaVersion},
          {"kind", "oracle"},
          {"k", s.k},
          {"seed", s.seed},
          {"trials", s.trials},
          {"agreements", s.agreements},
          {"mismatches", std::move(mismatches)}};
}

json json_value(const CertificateReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"check", f.check}, {"detail", f.detail}, {"witness", f.witness}});
  return {{"schema_version", kSchemaVersion},
          {"kind", "certificate"},
          {"all_ok", r.all_ok()},
          {"delta_depth", r.delta_depth},
          {"k_max", r.k_max},
          {"identities", {{"ok", r.identities_ok}, {"instances", r.identity_checks}}},
          {"recursion", {{"ok", r.recursion_ok}, {"instances", r.recursion_instances}}},
          {"base_case", {{"ok", r.base_case_ok}, {"instances", r.base_instances}, {"skipped", r.base_skipped}}},
          {"cone", {{"ok", r.cone_ok}, {"instances", r.cone_checks}}},
          {"delta", {{"ok", r.delta_ok}, {"words", r.delta_words}, {"collisions", r.delta_collisions}}},
          {"failures", std::move(failures)}};
}

std::string certificate_csv(const CertificateReport& r) {
  auto failures_of = [&r](std::initializer_list<std::string_view> checks) {
    std::size_t n = 0;
    for (const auto& f : r.failures)
      for (auto c : checks)
        if (f.check == c) ++n;
    return n;
  };
  std::ostringstream out;
  out << "check,ok,instances,failures\n";
  out << "identities," << r.identities_ok << ',' << r.identity_checks << ','
      << failures_of({"linear_identities", "word_identities"}) << '\n';
  out << "recursion," << r.recursion_ok << ',' << r.recursion_instances << ',' << failures_of({"recursion"}) << '\n';
  out << "base_case," << r.base_case_ok << ',' << r.base_instances << ','
      << failures_of({"base_values", "base_equivalence"}) << '\n';
  out << "cone," << r.cone_ok << ',' << r.cone_checks << ',' << failures_of({"cone_decomposition", "cone_closure"})
      << '\n';
  out << "delta," << r.delta_ok << ',' << r.delta_words << ','
      << failures_of({"positive_entry", "decreasing", "positive_trace", "power_step", "generator_traces", "inductive_step"}) << '\n';
  return out.str();
}

}  // namespace tracesign
