#include "cosetlab/cache.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "cosetlab/error.hpp"
#include "cosetlab/spec_io.hpp"

namespace cosetlab {

using nlohmann::json;

namespace {
constexpr std::string_view kLatticeFormat = "cosetlab-lattice-v1";
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::IoError, "SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xF]);
  }
  return out;
}

std::string lattice_cache_key(const GroupSpec& spec) {
  return sha256_hex(canonical_dump(group_spec_to_json(spec)));
}

std::string_view to_string(CacheStatus s) noexcept {
  switch (s) {
    case CacheStatus::Disabled: return "disabled";
    case CacheStatus::Miss: return "miss";
    case CacheStatus::Hit: return "hit";
    case CacheStatus::Corrupt: return "corrupt";
  }
  return "unknown";
}

namespace {

std::filesystem::path entry_path(const std::filesystem::path& dir, const GroupSpec& spec) {
  return dir / (lattice_cache_key(spec) + ".json");
}

json payload(const FiniteGroup& g, const std::vector<Subgroup>& lattice) {
  json subs = json::array();
  for (const auto& h : lattice) subs.push_back(h.elements().to_vector());
  return {{"order", g.order()}, {"subgroups", subs}};
}

}  // namespace

std::filesystem::path store_lattice(const std::filesystem::path& dir, const GroupSpec& spec,
                                    const FiniteGroup& g, const std::vector<Subgroup>& lattice) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
  const auto body = payload(g, lattice);
  const json doc = {{"format", kLatticeFormat},
                    {"key", lattice_cache_key(spec)},
                    {"checksum", sha256_hex(canonical_dump(body))},
                    {"lattice", body}};
  const auto path = entry_path(dir, spec);
  // Write then rename so readers never see a half-written entry.
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp);
    out << canonical_dump(doc) << '\n';
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot rename cache entry: " + ec.message());
  return path;
}

std::optional<std::vector<Subgroup>> load_lattice(const std::filesystem::path& dir,
                                                  const GroupSpec& spec, const GroupPtr& g) {
  const auto path = entry_path(dir, spec);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();

  auto corrupt = [&](const std::string& why) -> Error {
    return Error(ErrorCode::CacheCorrupt, path.string() + ": " + why);
  };
  const json doc = json::parse(buf.str(), nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) throw corrupt("unparseable");
  if (doc.value("format", "") != kLatticeFormat) throw corrupt("wrong format tag");
  if (doc.value("key", "") != lattice_cache_key(spec)) throw corrupt("key mismatch");
  if (!doc.contains("lattice") || !doc.contains("checksum")) throw corrupt("missing fields");
  const auto& body = doc["lattice"];
  if (doc["checksum"] != sha256_hex(canonical_dump(body))) throw corrupt("checksum mismatch");

  try {
    if (body.at("order").get<std::size_t>() != g->order()) throw corrupt("group order mismatch");
    std::vector<Subgroup> out;
    for (const auto& elems : body.at("subgroups")) {
      const auto ids = elems.get<std::vector<Element>>();
      if (std::any_of(ids.begin(), ids.end(), [&](Element x) { return x >= g->order(); })) {
        throw corrupt("element id out of range");
      }
      out.push_back(Subgroup::from_elements(g, ElementSet::from(g->order(), ids)));
    }
    if (!std::is_sorted(out.begin(), out.end(), lattice_less)) throw corrupt("not sorted");
    return out;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CacheCorrupt) throw;
    throw corrupt(e.what());
  } catch (const json::exception& e) {
    throw corrupt(e.what());
  }
}

CachedLattice cached_lattice(const std::filesystem::path& dir, const GroupSpec& spec,
                             const GroupPtr& g, const EnumerateOptions& opts, std::ostream& warn) {
  CachedLattice out;
  if (dir.empty()) {
    out.subgroups = enumerate_subgroups(g, opts);
    return out;
  }
  try {
    if (auto hit = load_lattice(dir, spec, g)) {
      out.subgroups = std::move(*hit);
      out.status = CacheStatus::Hit;
      return out;
    }
    out.status = CacheStatus::Miss;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CacheCorrupt) throw;
    warn << "warning: " << e.what() << "; recomputing\n";
    out.status = CacheStatus::Corrupt;
  }
  out.subgroups = enumerate_subgroups(g, opts);
  store_lattice(dir, spec, *g, out.subgroups);
  return out;
}

}  // namespace cosetlab
