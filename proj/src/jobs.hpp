#pragma once

#include <string>

namespace vyb {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kCacheFormatVersion = "vyb-cache-1";

// Stable content hash used for cache keys.
std::string content_hash(const std::string& payload);

// Runs one JSON job line and returns one JSON result line:
//   {"ok":true,"command":...,"output":...} or {"ok":false,"error":"..."}.
// Deterministic byte-for-byte for identical inputs.
std::string run_job(const std::string& job_json);

// Same, backed by a directory cache (atomic write-temp-then-rename); a cache
// hit returns the stored line verbatim. Pass an empty dir to disable caching.
std::string run_job_cached(const std::string& job_json, const std::string& cache_dir);

}  // namespace vyb
