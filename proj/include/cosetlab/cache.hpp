#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cosetlab/group.hpp"
#include "cosetlab/subgroup.hpp"

namespace cosetlab {

std::string sha256_hex(std::string_view data);

/// Cache key: SHA-256 of the canonical groupspec-v1 JSON.
std::string lattice_cache_key(const GroupSpec& spec);

enum class CacheStatus { Disabled, Miss, Hit, Corrupt };
std::string_view to_string(CacheStatus s) noexcept;

struct CachedLattice {
  std::vector<Subgroup> subgroups;
  CacheStatus status = CacheStatus::Disabled;
};

/// Writes <dir>/<key>.json holding the sorted element lists and a checksum.
/// Throws IoError.
std::filesystem::path store_lattice(const std::filesystem::path& dir, const GroupSpec& spec,
                                    const FiniteGroup& g, const std::vector<Subgroup>& lattice);

/// Reads a cached lattice back. Empty when no file exists; throws CacheCorrupt
/// when the file fails its checksum or does not describe subgroups of g.
std::optional<std::vector<Subgroup>> load_lattice(const std::filesystem::path& dir,
                                                  const GroupSpec& spec, const GroupPtr& g);

/// Load-or-enumerate. A corrupt entry is reported on `warn`, recomputed and
/// rewritten. An empty dir disables caching.
CachedLattice cached_lattice(const std::filesystem::path& dir, const GroupSpec& spec,
                             const GroupPtr& g, const EnumerateOptions& opts, std::ostream& warn);

}  // namespace cosetlab
