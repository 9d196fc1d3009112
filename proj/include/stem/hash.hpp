#pragma once

#include <cstdint>
#include <string_view>

namespace stem {

// Seeded FNV-1a over bytes. Fingerprint hashing and bundle checksums both
// need a hash that is stable across platforms and library versions, which
// rules out std::hash.
inline std::uint64_t fnv1a64(std::string_view bytes,
                             std::uint64_t seed = 0xcbf29ce484222325ull) {
  std::uint64_t h = seed;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace stem
