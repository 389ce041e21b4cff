#pragma once

#include <optional>
#include <string>
#include <vector>

#include "voa/matrix.hpp"
#include "voa/spec.hpp"

namespace voa {

/// Fusion matrices plus the averaging matrix of one spec, the unit the
/// on-disk cache stores.
struct FusionCacheEntry {
    std::vector<IntMat> fusion;
    IntMat averaging;
};

/// Versioned binary cache keyed by the content hash of the spec's canonical
/// JSON. A version bump or any decode mismatch invalidates the file.
std::optional<FusionCacheEntry> cache_load(const std::string& dir, const VoaSpec& spec);
void cache_store(const std::string& dir, const VoaSpec& spec, const FusionCacheEntry& entry);

/// Path of the cache file a spec maps to, for diagnostics.
std::string cache_path(const std::string& dir, const VoaSpec& spec);

}  // namespace voa
