#pragma once

#include <string>

#include "umemura/sigma.hpp"

namespace umemura {

// On-disk cache document:
//   {"version": 1, "r": "sym"|"<num>/<den>",
//    "entries": [polynomial documents, a_0..],
//    "sigmas":  [polynomial documents, sigma_0..],
//    "methods": ["recurrence"|"hankel"|"cached", ...],
//    "checksums": {"entries": "<hex>", "sigmas": "<hex>"}}
// Checksums are FNV-1a 64 over the concatenated canonical term documents.

inline constexpr int kCacheVersion = 1;

std::string cache_to_json_string(const UmemuraCache& cache);

/// Throws VersionMismatch on a foreign version field and CorruptCache on
/// malformed documents or checksum failure.
UmemuraCache cache_from_json_string(const std::string& text);

void cache_store(const UmemuraCache& cache, const std::string& path);
UmemuraCache cache_load(const std::string& path);

/// Append-only merge: adds strictly new indices from `update` into `base`;
/// overlapping indices must be bit-identical (CorruptCache otherwise).
UmemuraCache cache_merge(UmemuraCache base, const UmemuraCache& update);

}  // namespace umemura
