#include "stem/fingerprints.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>

#include "stem/hash.hpp"

namespace stem::fp {

namespace {

std::string atom_token(const chem::Atom& atom) {
  std::string t = atom.element;
  if (atom.is_aromatic)
    for (char& c : t) c = static_cast<char>(std::tolower(c));
  return t;
}

char bond_token(chem::BondOrder order) {
  switch (order) {
    case chem::BondOrder::Single: return '-';
    case chem::BondOrder::Double: return '=';
    case chem::BondOrder::Triple: return '#';
    case chem::BondOrder::Aromatic: return ':';
  }
  return '-';
}

struct PathCollector {
  const chem::MolGraph& mol;
  const FingerprintConfig& cfg;
  std::vector<std::string> strings;
  std::size_t enumerated = 0;
  bool truncated = false;

  void run() {
    std::vector<int> path;
    std::vector<char> visited(mol.atoms.size(), 0);
    for (int start = 0; start < mol.n_atoms(); ++start) {
      if (truncated) break;
      path.clear();
      path.push_back(start);
      visited[start] = 1;
      extend(path, visited);
      visited[start] = 0;
    }
  }

  void extend(std::vector<int>& path, std::vector<char>& visited) {
    if (truncated) return;
    if (++enumerated > cfg.max_paths) {
      truncated = true;
      return;
    }
    strings.push_back(canonical_string(path));
    if (static_cast<int>(path.size()) > cfg.max_path_len) return;
    const int tail = path.back();
    for (auto [next, bi] : mol.adj[tail]) {
      if (visited[next]) continue;
      path.push_back(next);
      visited[next] = 1;
      extend(path, visited);
      visited[next] = 0;
      path.pop_back();
    }
  }

  std::string render(const std::vector<int>& atoms, bool reverse) const {
    std::string out;
    const int n = static_cast<int>(atoms.size());
    for (int i = 0; i < n; ++i) {
      const int idx = reverse ? n - 1 - i : i;
      if (i > 0) {
        const int prev = reverse ? n - i : i - 1;
        int bond = *mol.bond_between(atoms[prev], atoms[idx]);
        out += bond_token(mol.bonds[bond].order);
      }
      out += atom_token(mol.atoms[atoms[idx]]);
    }
    return out;
  }

  std::string canonical_string(const std::vector<int>& atoms) const {
    std::string fwd = render(atoms, false);
    if (atoms.size() < 2) return fwd;
    std::string rev = render(atoms, true);
    return fwd <= rev ? fwd : rev;
  }
};

std::size_t bit_index(const std::string& feature, std::uint64_t seed, int bits) {
  return static_cast<std::size_t>(fnv1a64(feature, 0xcbf29ce484222325ull ^ seed) %
                                  static_cast<std::uint64_t>(bits));
}

std::string ring_feature_string(const chem::MolGraph& mol,
                                const std::vector<int>& ring) {
  bool aromatic = true;
  const int n = static_cast<int>(ring.size());
  for (int i = 0; i < n; ++i) {
    auto bi = mol.bond_between(ring[i], ring[(i + 1) % n]);
    if (!bi || mol.bonds[*bi].order != chem::BondOrder::Aromatic) {
      aromatic = false;
      break;
    }
  }
  std::vector<std::string> elems;
  for (int a : ring) elems.push_back(mol.atoms[a].element);
  std::sort(elems.begin(), elems.end());
  std::string out = "R" + std::to_string(n) + (aromatic ? ":arom:" : ":alip:");
  for (const auto& e : elems) out += e;
  return out;
}

}  // namespace

std::vector<std::string> enumerate_path_strings(const chem::MolGraph& mol,
                                                const FingerprintConfig& cfg) {
  PathCollector collector{mol, cfg, {}, 0, false};
  collector.run();
  if (collector.truncated)
    std::cerr << "fingerprint: path enumeration capped at " << cfg.max_paths
              << " paths for '" << mol.source_smiles << "'\n";
  return collector.strings;
}

BitFingerprint path_fingerprint(const chem::MolGraph& mol,
                                const FingerprintConfig& cfg) {
  PathCollector collector{mol, cfg, {}, 0, false};
  collector.run();
  BitFingerprint out;
  out.kind = FingerprintKind::Path;
  out.truncated = collector.truncated;
  out.bits.assign(cfg.path_bits, 0);
  for (const auto& s : collector.strings)
    out.bits[bit_index(s, cfg.hash_seed, cfg.path_bits)] = 1;
  return out;
}

BitFingerprint pathring_fingerprint(const chem::MolGraph& mol,
                                    const FingerprintConfig& cfg) {
  PathCollector collector{mol, cfg, {}, 0, false};
  collector.run();
  BitFingerprint out;
  out.kind = FingerprintKind::PathRing;
  out.truncated = collector.truncated;
  out.bits.assign(cfg.pathring_bits, 0);
  for (const auto& s : collector.strings)
    out.bits[bit_index(s, cfg.hash_seed, cfg.pathring_bits)] = 1;
  for (const auto& ring : mol.rings) {
    const std::string feature = ring_feature_string(mol, ring);
    out.bits[bit_index(feature, cfg.hash_seed, cfg.pathring_bits)] = 1;
  }
  return out;
}

BitFingerprint key_fingerprint(const chem::MolGraph& mol,
                               const FingerprintConfig& cfg) {
  BitFingerprint out;
  out.kind = FingerprintKind::Keys;
  out.bits.assign(cfg.key_catalog.patterns.size(), 0);
  for (std::size_t i = 0; i < cfg.key_catalog.patterns.size(); ++i)
    out.bits[i] = alerts::matches(cfg.key_catalog.patterns[i], mol) ? 1 : 0;
  return out;
}

const FeatureBlock::Segment& FeatureBlock::segment_at(std::size_t col) const {
  for (const Segment& s : segments)
    if (col >= s.offset && col < s.offset + s.length) return s;
  throw Error("column " + std::to_string(col) + " outside feature block");
}

FeatureBlock concat_fp(const BitFingerprint& a, const BitFingerprint& b,
                       const BitFingerprint& c, const FingerprintConfig& cfg) {
  const BitFingerprint* by_kind[3] = {nullptr, nullptr, nullptr};
  for (const BitFingerprint* f : {&a, &b, &c}) {
    const int slot = static_cast<int>(f->kind);
    if (by_kind[slot])
      throw KindMismatch("concat_fp needs three distinct fingerprint kinds");
    by_kind[slot] = f;
  }
  const BitFingerprint& keys = *by_kind[static_cast<int>(FingerprintKind::Keys)];
  const BitFingerprint& path = *by_kind[static_cast<int>(FingerprintKind::Path)];
  const BitFingerprint& pathring =
      *by_kind[static_cast<int>(FingerprintKind::PathRing)];
  if (keys.bits.size() != cfg.key_catalog.patterns.size())
    throw KindMismatch("keys fingerprint length does not match the catalog");

  FeatureBlock block;
  block.values.reserve(keys.bits.size() + path.bits.size() + pathring.bits.size());
  auto append = [&block](const std::string& seg_name,
                         const std::vector<std::uint8_t>& bits,
                         const std::vector<std::string>& names) {
    FeatureBlock::Segment seg{seg_name, block.values.size(), bits.size()};
    for (std::size_t i = 0; i < bits.size(); ++i) {
      block.values.push_back(static_cast<double>(bits[i]));
      block.names.push_back(names[i]);
    }
    block.segments.push_back(seg);
  };

  std::vector<std::string> key_names;
  for (const auto& p : cfg.key_catalog.patterns)
    key_names.push_back("key_" + p.name);
  std::vector<std::string> path_names(path.bits.size());
  for (std::size_t i = 0; i < path.bits.size(); ++i)
    path_names[i] = "path_" + std::to_string(i);
  std::vector<std::string> pathring_names(pathring.bits.size());
  for (std::size_t i = 0; i < pathring.bits.size(); ++i)
    pathring_names[i] = "pathring_" + std::to_string(i);

  append("keys", keys.bits, key_names);
  append("path", path.bits, path_names);
  append("pathring", pathring.bits, pathring_names);
  return block;
}

}  // namespace stem::fp
