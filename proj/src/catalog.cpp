#include "cosetlab/catalog.hpp"

#include "cosetlab/error.hpp"

namespace cosetlab {

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (int n = 2; n <= 24; ++n) v.push_back("C" + std::to_string(n));
    for (int n = 3; n <= 12; ++n) v.push_back("D" + std::to_string(n));
    for (int n = 3; n <= 5; ++n) v.push_back("S" + std::to_string(n));
    v.insert(v.end(), {"A4", "A5", "Q8", "C2xC2", "C2xC2xC2", "C6xC2", "S3xC2"});
    return v;
  }();
  return names;
}

GroupSpec spec_from_name(std::string_view name) {
  std::vector<GroupSpec> parts;
  std::size_t start = 0;
  while (start <= name.size()) {
    const auto cut = name.find('x', start);
    const auto part = name.substr(start, cut == std::string_view::npos ? cut : cut - start);
    if (part.empty()) throw Error(ErrorCode::UnknownFamily, "bad group name '" + std::string(name) + "'");
    parts.push_back(GroupSpec::named(std::string(part)));
    if (cut == std::string_view::npos) break;
    start = cut + 1;
  }
  if (parts.size() == 1) return std::move(parts.front());
  return GroupSpec::product(std::move(parts));
}

}  // namespace cosetlab
