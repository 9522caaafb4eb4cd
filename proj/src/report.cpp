#include "cosetlab/report.hpp"

#include <functional>
#include <map>
#include <set>

namespace cosetlab {

using nlohmann::json;

json to_json(const Violation& v) {
  json subs = json::array();
  for (const auto& h : v.subgroups) subs.push_back(h.elements().to_vector());
  return {{"k", static_cast<unsigned>(v.k)},
          {"subgroups", subs},
          {"lattice_ids", v.lattice_ids},
          {"reps", v.reps},
          {"gcd_matrix", v.gcd_matrix}};
}

json to_json(const VerificationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  return {{"k", static_cast<unsigned>(r.k)},
          {"status", r.theorem_range() ? "theorem" : "conjecture-open"},
          {"note", r.theorem_range()
                       ? "proven case: any violation indicates an implementation bug"
                       : "conjecture open: absence of violations is evidence, not proof"},
          {"subgroup_count", r.subgroup_count},
          {"candidate_cliques", r.candidate_cliques},
          {"coset_tuples_examined", r.coset_tuples_examined},
          {"confirmed", r.confirmed()},
          {"implementation_bug", r.implementation_bug()},
          {"violations", violations}};
}

json to_json(const LemmaSuiteResult& r) {
  json results = json::object();
  for (const auto& t : r.tallies) {
    json entry = {{"checked", t.checked}, {"passed", t.passed}, {"failed", t.failed}};
    if (t.first_failure) entry["first_failure"] = *t.first_failure;
    results[t.id] = entry;
  }
  return {{"tier", r.tier},
          {"seed", r.seed},
          {"subgroup_count", r.subgroup_count},
          {"pair_count", r.pair_count},
          {"triple_count", r.triple_count},
          {"all_passed", r.all_passed()},
          {"results", results}};
}

json to_json(const Subgroup& h, std::size_t id) {
  return {{"id", id}, {"order", h.order()}, {"index", h.index()},
          {"elements", h.elements().to_vector()}};
}

namespace {

json counts(const CensusCounts& c) {
  return {{"total", c.total},
          {"s_pair", c.s_pair},
          {"s_pair_pair", c.s_pair_pair},
          {"meet_all", c.meet_all}};
}

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json census_block(std::span<const std::size_t, 3> ids, const TripleCensus& c,
                  const TripleDiagnostics& d) {
  const auto bound = strict_bound_holds(c, d);
  return {{"subgroups", std::vector<std::size_t>(ids.begin(), ids.end())},
          {"indices", c.indices},
          {"closed_form", counts(c.closed_form)},
          {"enumerated", c.enumerated ? counts(*c.enumerated) : json(nullptr)},
          {"s_triple", opt(c.s_triple)},
          {"n_disjoint", opt(c.n_disjoint)},
          {"n_disjoint_direct", opt(c.n_disjoint_direct)},
          {"cap_exceeded", c.cap_exceeded()},
          {"consistent", c.consistent()},
          {"r_values",
           {{"r_ij", d.r_pair[0]}, {"r_ik", d.r_pair[1]}, {"r_jk", d.r_pair[2]},
            {"r_ijk", d.r_triple}}},
          {"inequalities",
           {{"index_inequality_ok", d.index_inequality_ok},
            {"divisibility_ok", d.divisibility_ok},
            {"common_gcd", opt(d.common_gcd)},
            {"r_product_ok", d.r_product_ok},
            {"r_divisibility_ok", d.r_divisibility_ok},
            {"strict_bound_holds", opt(bound)}}}};
}

json without_runtime(const json& report) {
  json out = report;
  out.erase("runtime");
  return out;
}

namespace {

// Minimal schema language mirroring schema/cosetlab-report-v1.schema.json:
// each node lists required and optional keys with a type check per key.
enum class T { Str, UInt, Num, Bool, Arr, Obj, UIntOrNull, BoolOrNull, ObjOrNull, Any };

bool type_ok(const json& v, T t) {
  switch (t) {
    case T::Str: return v.is_string();
    case T::UInt: return v.is_number_unsigned();
    case T::Num: return v.is_number();
    case T::Bool: return v.is_boolean();
    case T::Arr: return v.is_array();
    case T::Obj: return v.is_object();
    case T::UIntOrNull: return v.is_null() || v.is_number_unsigned();
    case T::BoolOrNull: return v.is_null() || v.is_boolean();
    case T::ObjOrNull: return v.is_null() || v.is_object();
    case T::Any: return true;
  }
  return false;
}

struct Shape {
  std::map<std::string, T> required;
  std::map<std::string, T> optional;
};

void check(const json& v, const Shape& s, const std::string& where,
           std::vector<std::string>& problems) {
  if (!v.is_object()) {
    problems.push_back(where + ": expected object");
    return;
  }
  for (const auto& [k, t] : s.required) {
    if (!v.contains(k)) {
      problems.push_back(where + ": missing '" + k + "'");
    } else if (!type_ok(v[k], t)) {
      problems.push_back(where + "." + k + ": wrong type");
    }
  }
  for (const auto& [k, val] : v.items()) {
    if (s.required.contains(k)) continue;
    const auto it = s.optional.find(k);
    if (it == s.optional.end()) {
      problems.push_back(where + ": unknown field '" + k + "'");
    } else if (!type_ok(val, it->second)) {
      problems.push_back(where + "." + k + ": wrong type");
    }
  }
}

}  // namespace

std::vector<std::string> validate_report(const json& report) {
  std::vector<std::string> p;
  check(report,
        {{{"format", T::Str}, {"tool_version", T::Str}, {"command", T::Str}, {"config", T::Obj},
          {"group", T::Obj}, {"runtime", T::Obj}},
         {{"verification", T::Arr}, {"lemmas", T::Obj}, {"census", T::Arr},
          {"subgroups", T::Arr}}},
        "$", p);
  if (!p.empty()) return p;
  if (report["format"] != kReportFormat) p.push_back("$.format: wrong tag");
  static const std::set<std::string> commands = {"verify", "lemmas", "census", "subgroups"};
  if (!commands.contains(report["command"].get<std::string>())) p.push_back("$.command: unknown");

  check(report["config"],
        {{{"group", T::Str}, {"k_min", T::UInt}, {"k_max", T::UInt}, {"seed", T::UInt},
          {"max_order", T::UInt}, {"max_subgroups", T::UInt}, {"max_cliques", T::UInt},
          {"max_census", T::UInt}, {"samples", T::UInt}},
         {{"triple", T::Arr}}},
        "$.config", p);
  check(report["group"],
        {{{"label", T::Str}, {"order", T::UInt}, {"subgroup_count", T::UInt},
          {"spec_sha256", T::Str}},
         {}},
        "$.group", p);
  check(report["runtime"],
        {{{"elapsed_ms", T::Num}, {"cache_status", T::Str}, {"jobs", T::UInt}},
         {{"per_k_elapsed_ms", T::Obj}}},
        "$.runtime", p);

  if (report.contains("verification")) {
    for (std::size_t i = 0; i < report["verification"].size(); ++i) {
      const auto& e = report["verification"][i];
      const auto w = "$.verification[" + std::to_string(i) + "]";
      check(e,
            {{{"k", T::UInt}, {"status", T::Str}, {"note", T::Str}, {"subgroup_count", T::UInt},
              {"candidate_cliques", T::UInt}, {"coset_tuples_examined", T::UInt},
              {"confirmed", T::Bool}, {"implementation_bug", T::Bool}, {"violations", T::Arr}},
             {}},
            w, p);
      if (!e.is_object() || !e.contains("violations") || !e["violations"].is_array()) continue;
      for (const auto& v : e["violations"]) {
        check(v,
              {{{"k", T::UInt}, {"subgroups", T::Arr}, {"lattice_ids", T::Arr}, {"reps", T::Arr},
                {"gcd_matrix", T::Arr}},
               {}},
              w + ".violations[]", p);
      }
    }
  }
  if (report.contains("lemmas")) {
    const auto& l = report["lemmas"];
    check(l,
          {{{"tier", T::Str}, {"seed", T::UInt}, {"subgroup_count", T::UInt},
            {"pair_count", T::UInt}, {"triple_count", T::UInt}, {"all_passed", T::Bool},
            {"results", T::Obj}},
           {}},
          "$.lemmas", p);
    if (l.is_object() && l.contains("results") && l["results"].is_object()) {
      for (const auto& [id, r] : l["results"].items()) {
        if (std::find(kLemmaIds.begin(), kLemmaIds.end(), id) == kLemmaIds.end()) {
          p.push_back("$.lemmas.results: unknown lemma id '" + id + "'");
        }
        check(r, {{{"checked", T::UInt}, {"passed", T::UInt}, {"failed", T::UInt}},
                  {{"first_failure", T::Str}}},
              "$.lemmas.results." + id, p);
      }
    }
  }
  if (report.contains("census")) {
    for (const auto& c : report["census"]) {
      check(c,
            {{{"subgroups", T::Arr}, {"indices", T::Arr}, {"closed_form", T::Obj},
              {"enumerated", T::ObjOrNull}, {"s_triple", T::UIntOrNull},
              {"n_disjoint", T::UIntOrNull}, {"n_disjoint_direct", T::UIntOrNull},
              {"cap_exceeded", T::Bool}, {"consistent", T::Bool}, {"r_values", T::Obj},
              {"inequalities", T::Obj}},
             {}},
            "$.census[]", p);
      if (!c.is_object()) continue;
      const Shape counts_shape{
          {{"total", T::UInt}, {"s_pair", T::Arr}, {"s_pair_pair", T::Arr}, {"meet_all", T::UInt}},
          {}};
      if (c.contains("closed_form")) check(c["closed_form"], counts_shape, "$.census[].closed_form", p);
      if (c.contains("enumerated") && !c["enumerated"].is_null()) {
        check(c["enumerated"], counts_shape, "$.census[].enumerated", p);
      }
      if (c.contains("r_values")) {
        check(c["r_values"],
              {{{"r_ij", T::UInt}, {"r_ik", T::UInt}, {"r_jk", T::UInt}, {"r_ijk", T::UInt}}, {}},
              "$.census[].r_values", p);
      }
      if (c.contains("inequalities")) {
        check(c["inequalities"],
              {{{"index_inequality_ok", T::Bool}, {"divisibility_ok", T::Bool},
                {"common_gcd", T::UIntOrNull}, {"r_product_ok", T::Bool},
                {"r_divisibility_ok", T::Bool}, {"strict_bound_holds", T::BoolOrNull}},
               {}},
              "$.census[].inequalities", p);
      }
    }
  }
  if (report.contains("subgroups")) {
    for (const auto& s : report["subgroups"]) {
      check(s,
            {{{"id", T::UInt}, {"order", T::UInt}, {"index", T::UInt}, {"elements", T::Arr}}, {}},
            "$.subgroups[]", p);
    }
  }
  return p;
}

}  // namespace cosetlab
