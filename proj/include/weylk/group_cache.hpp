#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylk/weyl_group.hpp"

namespace weylk::group_cache {

// Bumping the version invalidates every existing cache file.
inline constexpr const char* kCacheVersion = "weylk.group-cache.v1";

// FNV-1a 64-bit over the cache version and the Cartan matrix entries; a cache
// file whose recorded hash differs is stale and silently recomputed.
std::string content_hash(const exact_linalg::IntMatrix& cartan);

struct CachedGroup {
    weyl_group::Group group;
    std::vector<weyl_group::ConjugacyClass> classes;
};

// Writes the enumerated group and its class partition as a JSON document.
// Throws CacheError when the file cannot be written.
void save(const std::string& path, const weyl_group::Group& g,
          const std::vector<weyl_group::ConjugacyClass>& classes);

// nullopt when the file does not exist or records a different version/hash
// (stale caches are recomputed, not fatal); CacheError when the file exists
// but is not a well-formed cache document for this root system.
std::optional<CachedGroup> load(const std::string& path, const root_system::RootSystem& rs);

} // namespace weylk::group_cache
