#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace folrig::io {

// FNV-1a, 64-bit: tiny, dependency-free, and stable across platforms.  Used
// for input fingerprints in run manifests and cache integrity tags -- not
// for anything adversarial.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

// Fingerprint of a file's raw bytes; ValidationError when unreadable.
std::string hash_file(const std::string& path);

}  // namespace folrig::io
