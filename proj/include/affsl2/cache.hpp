#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "affsl2/tables.hpp"

namespace affsl2 {

inline constexpr int kCacheVersion = 1;

/// Environment variable naming the default cache file.
inline constexpr char const* kCacheEnvVar = "AFFSL2_CACHE";

struct CacheCounts {
  std::size_t k_equivariant = 0;
  std::size_t xi_equivariant = 0;
  std::size_t cohomology = 0;

  std::size_t total() const { return k_equivariant + xi_equivariant + cohomology; }
};

/// JSON document {"version": 1, "entries": [...]} holding every memoized
/// entry, sorted by (theory, n, m, k). Each entry is
/// {"theory", "n", "m", "k", "value", "provenance"} with value in canonical
/// text form.
std::string cache_serialize(Tables const& tables);

/// Validates every record of a cache document and merges them into tables.
/// Unknown fields, non-canonical values, out-of-support indices, and values
/// failing their invariants (evaluation at 1 against the ordinary closed
/// forms, recomputed base cases, cohomology degree and closed forms) are
/// rejected with CorruptCache naming the record; nothing is merged then.
/// Blank input is an empty cache.
CacheCounts cache_merge(Tables& tables, std::string_view text);

CacheCounts cache_load(Tables& tables, std::filesystem::path const& path);  // missing file -> empty
void cache_store(Tables const& tables, std::filesystem::path const& path);  // throws IoError

/// Entry counts in a cache document without merging it anywhere.
CacheCounts cache_inspect(std::string_view text);

}  // namespace affsl2
