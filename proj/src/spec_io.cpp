#include "cosetlab/spec_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cosetlab/error.hpp"

namespace cosetlab {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorCode::InvalidSpec, why); }

std::size_t positive(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned() || j[key].get<std::size_t>() == 0) {
    bad(std::string("'") + key + "' must be a positive integer");
  }
  return j[key].get<std::size_t>();
}

std::vector<std::vector<Element>> int_matrix(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) bad(std::string("'") + key + "' must be an array");
  std::vector<std::vector<Element>> out;
  for (const auto& row : j[key]) {
    if (!row.is_array()) bad(std::string("'") + key + "' rows must be arrays");
    auto& r = out.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_unsigned()) bad(std::string("'") + key + "' entries must be non-negative");
      r.push_back(v.get<Element>());
    }
  }
  return out;
}

void only_keys(const json& j, std::initializer_list<const char*> allowed) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, _] : j.items()) {
    if (!ok.contains(k)) bad("unexpected field '" + k + "'");
  }
}

GroupSpec parse(const json& j) {
  if (!j.is_object()) bad("group spec must be an object");
  if (j.contains("format") && j["format"] != kGroupSpecFormat) bad("unsupported format tag");
  if (!j.contains("kind") || !j["kind"].is_string()) bad("missing 'kind'");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "cayley") {
    only_keys(j, {"format", "kind", "order", "table"});
    auto spec = GroupSpec::cayley(int_matrix(j, "table"));
    spec.order = positive(j, "order");
    return spec;
  }
  if (kind == "perm") {
    only_keys(j, {"format", "kind", "degree", "generators"});
    return GroupSpec::perm(positive(j, "degree"), int_matrix(j, "generators"));
  }
  if (kind == "named") {
    only_keys(j, {"format", "kind", "name"});
    if (!j.contains("name") || !j["name"].is_string()) bad("'name' must be a string");
    return GroupSpec::named(j["name"].get<std::string>());
  }
  if (kind == "product") {
    only_keys(j, {"format", "kind", "factors"});
    if (!j.contains("factors") || !j["factors"].is_array()) bad("'factors' must be an array");
    std::vector<GroupSpec> factors;
    for (const auto& f : j["factors"]) factors.push_back(parse(f));
    if (factors.size() < 2) bad("product needs at least two factors");
    return GroupSpec::product(std::move(factors));
  }
  bad("unknown kind '" + kind + "'");
}

json body(const GroupSpec& s) {
  switch (s.kind) {
    case GroupSpec::Kind::Cayley:
      return {{"kind", "cayley"}, {"order", s.order}, {"table", s.table}};
    case GroupSpec::Kind::Perm:
      return {{"kind", "perm"}, {"degree", s.degree}, {"generators", s.generators}};
    case GroupSpec::Kind::Named:
      return {{"kind", "named"}, {"name", s.name}};
    case GroupSpec::Kind::Product: {
      json factors = json::array();
      for (const auto& f : s.factors) factors.push_back(body(f));
      return {{"kind", "product"}, {"factors", factors}};
    }
  }
  return {};
}

}  // namespace

GroupSpec group_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("format") || j["format"] != kGroupSpecFormat) {
    bad("missing or wrong 'format' tag (expected groupspec-v1)");
  }
  return parse(j);
}

json group_spec_to_json(const GroupSpec& spec) {
  auto j = body(spec);
  j["format"] = kGroupSpecFormat;
  return j;
}

std::string canonical_dump(const json& j) { return j.dump(); }

GroupSpec read_group_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    bad("malformed JSON in " + path.string() + ": " + e.what());
  }
  return group_spec_from_json(j);
}

}  // namespace cosetlab
