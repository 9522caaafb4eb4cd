#pragma once

#include <filesystem>
#include <string>

#include "cosetlab/group.hpp"
#include "json.hpp"

namespace cosetlab {

inline constexpr std::string_view kGroupSpecFormat = "groupspec-v1";

/// Parses a groupspec-v1 document. The top level must carry the format tag;
/// nested product factors may omit it. Throws InvalidSpec.
GroupSpec group_spec_from_json(const nlohmann::json& j);

/// Canonical form: format tag on the top level only, keys sorted.
nlohmann::json group_spec_to_json(const GroupSpec& spec);

/// Sorted keys, no whitespace.
std::string canonical_dump(const nlohmann::json& j);

/// Throws IoError when unreadable and InvalidSpec when malformed.
GroupSpec read_group_spec_file(const std::filesystem::path& path);

}  // namespace cosetlab
