#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stem/alerts.hpp"
#include "stem/chem.hpp"
#include "stem/error.hpp"

namespace stem::fp {

class KindMismatch : public Error {
 public:
  using Error::Error;
};

enum class FingerprintKind { Path, PathRing, Keys };

struct FingerprintConfig {
  int path_bits = 1024;
  int pathring_bits = 1024;
  int max_path_len = 7;          // bonds along a path
  std::uint64_t hash_seed = 0x5f3a1c9d2b8e4706ull;
  std::size_t max_paths = 100000;  // per-molecule enumeration cap
  alerts::Catalog key_catalog;
};

struct BitFingerprint {
  FingerprintKind kind = FingerprintKind::Path;
  std::vector<std::uint8_t> bits;  // 0/1
  bool truncated = false;          // path cap was hit

  int popcount() const {
    int n = 0;
    for (auto b : bits) n += b;
    return n;
  }
};

// A named, concatenated feature vector: values plus per-column names and
// the segment layout they came from.
struct FeatureBlock {
  struct Segment {
    std::string name;
    std::size_t offset = 0;
    std::size_t length = 0;
  };
  std::vector<double> values;
  std::vector<std::string> names;
  std::vector<Segment> segments;

  std::size_t size() const { return values.size(); }
  const std::string& name_at(std::size_t col) const { return names.at(col); }
  const Segment& segment_at(std::size_t col) const;
};

// Hashed fingerprint over all simple heavy-atom paths of 0..max_path_len
// bonds. Each path is rendered as a (element, aromatic flag, bond order)
// string taken in its lexicographically smaller direction and hashed into
// [0, path_bits) with seeded FNV-1a.
BitFingerprint path_fingerprint(const chem::MolGraph& mol,
                                const FingerprintConfig& cfg);

// Path features re-hashed into pathring_bits plus one hashed feature per
// perceived ring (size, aromatic or aliphatic, element multiset).
BitFingerprint pathring_fingerprint(const chem::MolGraph& mol,
                                    const FingerprintConfig& cfg);

// One bit per catalog pattern: set iff the pattern embeds in the molecule.
BitFingerprint key_fingerprint(const chem::MolGraph& mol,
                               const FingerprintConfig& cfg);

// Ordered concatenation keys || path || pathring with named column ranges.
// The three inputs must have pairwise distinct kinds.
FeatureBlock concat_fp(const BitFingerprint& a, const BitFingerprint& b,
                       const BitFingerprint& c, const FingerprintConfig& cfg);

// Canonical strings for the enumerated paths (exposed for tests/oracles).
std::vector<std::string> enumerate_path_strings(const chem::MolGraph& mol,
                                                const FingerprintConfig& cfg);

}  // namespace stem::fp
