#pragma once

// Shared helpers for the test suites: random graph/pattern generators and
// small brute-force oracles kept independent of the library code they check.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "stem/alerts.hpp"
#include "stem/chem.hpp"
#include "stem/rng.hpp"

namespace testutil {

// Random connected non-aromatic molecule graph: spanning tree plus an
// occasional extra edge. Element/bond choices skew toward organic carbon.
inline stem::chem::MolGraph random_molgraph(stem::Rng& rng, int n_atoms,
                                            bool allow_charge = false) {
  using namespace stem::chem;
  static const std::vector<std::string> elements = {"C", "C", "C", "N",
                                                    "O", "S", "F", "Cl"};
  MolGraph mol;
  for (int i = 0; i < n_atoms; ++i) {
    Atom a;
    a.element = elements[rng.uniform_int(elements.size())];
    if (allow_charge && rng.uniform01() < 0.1)
      a.formal_charge = rng.uniform01() < 0.5 ? 1 : -1;
    mol.atoms.push_back(a);
  }
  auto has_bond = [&](int a, int b) {
    for (const Bond& bond : mol.bonds)
      if ((bond.a == a && bond.b == b) || (bond.a == b && bond.b == a))
        return true;
    return false;
  };
  auto random_order = [&] {
    double r = rng.uniform01();
    if (r < 0.75) return BondOrder::Single;
    if (r < 0.95) return BondOrder::Double;
    return BondOrder::Triple;
  };
  for (int i = 1; i < n_atoms; ++i) {
    int j = static_cast<int>(rng.uniform_int(i));
    mol.bonds.push_back(Bond{j, i, random_order()});
  }
  if (n_atoms >= 3 && rng.uniform01() < 0.4) {
    int a = static_cast<int>(rng.uniform_int(n_atoms));
    int b = static_cast<int>(rng.uniform_int(n_atoms));
    if (a != b && !has_bond(a, b))
      mol.bonds.push_back(Bond{a, b, random_order()});
  }
  finalize_graph(mol);
  return mol;
}

// Random small query pattern (1..max_atoms atoms, chain plus optional
// closing bond), mixing element constraints with wildcards.
inline stem::alerts::Pattern random_pattern(stem::Rng& rng, int max_atoms = 3) {
  using namespace stem::alerts;
  using stem::chem::BondOrder;
  static const std::vector<std::string> elements = {"C", "C", "N", "O",
                                                    "S", "F", "Cl"};
  Pattern p;
  p.id = "RND";
  p.name = "random";
  const int n = 1 + static_cast<int>(rng.uniform_int(max_atoms));
  for (int i = 0; i < n; ++i) {
    QueryAtom q;
    const double r = rng.uniform01();
    if (r < 0.12) {
      q.kind = AtomConstraintKind::AnyAtom;
    } else if (r < 0.24) {
      q.kind = AtomConstraintKind::AnyHalogen;
    } else {
      q.kind = AtomConstraintKind::Element;
      q.element = elements[rng.uniform_int(elements.size())];
      if (rng.uniform01() < 0.15) {
        q.charge_constrained = true;
        q.charge = 0;
      }
    }
    p.atoms.push_back(q);
  }
  auto random_order = [&] {
    double r = rng.uniform01();
    if (r < 0.75) return BondOrder::Single;
    if (r < 0.95) return BondOrder::Double;
    return BondOrder::Triple;
  };
  for (int i = 1; i < n; ++i)
    p.bonds.push_back(QueryBond{i - 1, i, random_order()});
  if (n == 3 && rng.uniform01() < 0.25)
    p.bonds.push_back(QueryBond{0, 2, random_order()});
  p.adj.assign(p.atoms.size(), {});
  for (int i = 0; i < static_cast<int>(p.bonds.size()); ++i) {
    p.adj[p.bonds[i].a].push_back({p.bonds[i].b, i});
    p.adj[p.bonds[i].b].push_back({p.bonds[i].a, i});
  }
  return p;
}

// Oracle: enumerate every injective query->molecule mapping and keep those
// satisfying all atom and bond constraints. Returns the distinct matched
// atom sets.
inline std::set<std::vector<int>> brute_force_match_sets(
    const stem::alerts::Pattern& pattern, const stem::chem::MolGraph& mol) {
  std::set<std::vector<int>> sets;
  const int nq = pattern.n_atoms();
  const int nm = mol.n_atoms();
  if (nq > nm) return sets;
  std::vector<int> mapping(nq, -1);
  std::vector<char> used(nm, 0);
  auto feasible = [&]() {
    for (const auto& qb : pattern.bonds) {
      auto bi = mol.bond_between(mapping[qb.a], mapping[qb.b]);
      if (!bi || mol.bonds[*bi].order != qb.order) return false;
    }
    return true;
  };
  std::vector<int> stack_pos{0};
  // plain nested enumeration via recursion
  std::function<void(int)> recurse = [&](int depth) {
    if (depth == nq) {
      if (feasible()) {
        std::vector<int> key = mapping;
        std::sort(key.begin(), key.end());
        sets.insert(key);
      }
      return;
    }
    for (int m = 0; m < nm; ++m) {
      if (used[m]) continue;
      if (!stem::alerts::atom_compatible(pattern.atoms[depth], mol.atoms[m]))
        continue;
      mapping[depth] = m;
      used[m] = 1;
      recurse(depth + 1);
      used[m] = 0;
      mapping[depth] = -1;
    }
  };
  recurse(0);
  return sets;
}

inline std::vector<int> identity_permutation(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  return perm;
}

}  // namespace testutil
