#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace krchar {

// On-disk copy of the tensor_decompose memo.  One record per line:
//   family,rank|lambda|nu|mu<TAB>multiplicity
// e.g. "D,5|0,1,0,0,0|0,0,2,0,0|0,1,2,0,0\t1".

struct CacheLoadReport {
    std::size_t records = 0;
    std::size_t products = 0;
    std::vector<std::string> warnings;
};

/// Merges the file into the in-memory memo.  A missing file is an empty cache;
/// malformed lines are skipped and reported in `warnings`.
CacheLoadReport cache_load(const std::filesystem::path& path);

/// Writes every memoised tensor product (temp file, then rename).  Returns the record count.
std::size_t cache_store(const std::filesystem::path& path);

/// KRCHAR_CACHE wins over the flag value.
std::optional<std::filesystem::path> resolve_cache_path(const std::optional<std::filesystem::path>& flag);

} // namespace krchar
