#include "stem/alerts.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace stem::alerts {

namespace {

void build_pattern_adjacency(Pattern& p) {
  p.adj.assign(p.atoms.size(), {});
  for (int i = 0; i < static_cast<int>(p.bonds.size()); ++i) {
    p.adj[p.bonds[i].a].push_back({p.bonds[i].b, i});
    p.adj[p.bonds[i].b].push_back({p.bonds[i].a, i});
  }
}

void check_connected(const Pattern& p, const std::string& context) {
  if (p.atoms.empty())
    throw CatalogLoadError("pattern '" + context + "' has no atoms");
  std::vector<int> seen(p.atoms.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [u, bi] : p.adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  if (std::count(seen.begin(), seen.end(), 1) !=
      static_cast<long>(p.atoms.size()))
    throw CatalogLoadError("pattern '" + context + "' is not connected");
}

bool is_halogen(const std::string& element) {
  return element == "F" || element == "Cl" || element == "Br" || element == "I";
}

}  // namespace

bool atom_compatible(const QueryAtom& q, const chem::Atom& a) {
  switch (q.kind) {
    case AtomConstraintKind::AnyAtom:
      return true;
    case AtomConstraintKind::AnyHalogen:
      return is_halogen(a.element);
    case AtomConstraintKind::Element:
      if (q.element != a.element) return false;
      if (q.require_aromatic != a.is_aromatic) return false;
      if (q.charge_constrained && q.charge != a.formal_charge) return false;
      return true;
  }
  return false;
}

Pattern make_pattern(const std::string& id, const std::string& name,
                     const chem::MolGraph& fragment) {
  Pattern p;
  p.id = id;
  p.name = name;
  for (const chem::Atom& a : fragment.atoms) {
    QueryAtom q;
    if (a.element == "ANY") {
      q.kind = AtomConstraintKind::AnyAtom;
    } else if (a.element == "HAL") {
      q.kind = AtomConstraintKind::AnyHalogen;
    } else {
      q.kind = AtomConstraintKind::Element;
      q.element = a.element;
      q.require_aromatic = a.is_aromatic;
      if (a.bracket) {
        q.charge_constrained = true;
        q.charge = a.formal_charge;
      }
    }
    p.atoms.push_back(q);
  }
  for (const chem::Bond& b : fragment.bonds)
    p.bonds.push_back(QueryBond{b.a, b.b, b.order});
  build_pattern_adjacency(p);
  check_connected(p, id);
  return p;
}

Pattern parse_pattern(const std::string& id, const std::string& smiles) {
  return make_pattern(id, id, chem::parse_fragment(smiles));
}

Catalog parse_catalog(const std::string& text) {
  Catalog catalog;
  catalog.source_text = text;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::size_t tab = line.find('\t', first);
    if (tab == std::string::npos)
      throw CatalogLoadError("catalog line " + std::to_string(line_no) +
                             ": expected NAME<TAB>PATTERN_SMILES");
    std::string name = line.substr(first, tab - first);
    std::size_t smiles_at = line.find_first_not_of(" \t", tab);
    if (smiles_at == std::string::npos)
      throw CatalogLoadError("catalog line " + std::to_string(line_no) +
                             ": missing pattern SMILES");
    std::string smiles = line.substr(smiles_at);
    while (!smiles.empty() && (smiles.back() == ' ' || smiles.back() == '\t'))
      smiles.pop_back();
    std::string pattern_id = name.substr(0, name.find('_'));
    try {
      chem::MolGraph fragment = chem::parse_fragment(smiles);
      catalog.patterns.push_back(make_pattern(pattern_id, name, fragment));
    } catch (const chem::ParseError& e) {
      throw CatalogLoadError("catalog line " + std::to_string(line_no) + " ('" +
                             name + "'): " + e.what());
    }
  }
  return catalog;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogLoadError("cannot open pattern catalog: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

namespace {

struct SearchState {
  const Pattern& pattern;
  const chem::MolGraph& mol;
  std::vector<std::vector<int>> candidates;  // per query atom
  std::vector<int> order;                    // query atom visit order
  std::vector<int> mapping;                  // query -> mol, -1 unmapped
  std::vector<char> used;                    // mol atom already mapped
  std::vector<std::vector<int>> results;
  bool first_only = false;
};

// Visit order: start at the query atom with the fewest candidates, then
// grow the mapped frontier, always picking the unvisited atom adjacent to
// the frontier with the fewest candidates.
std::vector<int> plan_order(const Pattern& p,
                            const std::vector<std::vector<int>>& candidates) {
  const int n = p.n_atoms();
  std::vector<int> order;
  std::vector<char> chosen(n, 0);
  int start = 0;
  for (int i = 1; i < n; ++i)
    if (candidates[i].size() < candidates[start].size()) start = i;
  order.push_back(start);
  chosen[start] = 1;
  while (static_cast<int>(order.size()) < n) {
    int best = -1;
    for (int q = 0; q < n; ++q) {
      if (chosen[q]) continue;
      bool adjacent = false;
      for (auto [u, bi] : p.adj[q])
        if (chosen[u]) adjacent = true;
      if (!adjacent) continue;  // pattern is connected, so this only defers
      if (best < 0 || candidates[q].size() < candidates[best].size()) best = q;
    }
    order.push_back(best);
    chosen[best] = 1;
  }
  return order;
}

void backtrack(SearchState& st, std::size_t depth) {
  if (depth == st.order.size()) {
    st.results.push_back(st.mapping);
    return;
  }
  const int q = st.order[depth];
  for (int m : st.candidates[q]) {
    if (st.first_only && !st.results.empty()) return;
    if (st.used[m]) continue;
    bool ok = true;
    for (auto [qn, qbi] : st.pattern.adj[q]) {
      const int mapped = st.mapping[qn];
      if (mapped < 0) continue;
      auto mol_bond = st.mol.bond_between(m, mapped);
      if (!mol_bond || st.mol.bonds[*mol_bond].order !=
                           st.pattern.bonds[qbi].order) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    st.mapping[q] = m;
    st.used[m] = 1;
    backtrack(st, depth + 1);
    st.mapping[q] = -1;
    st.used[m] = 0;
  }
}

}  // namespace

namespace {

std::vector<std::vector<int>> all_embeddings(const Pattern& pattern,
                                             const chem::MolGraph& mol,
                                             bool first_only) {
  if (pattern.atoms.empty() || pattern.n_atoms() > mol.n_atoms()) return {};
  std::vector<std::vector<int>> candidates(pattern.atoms.size());
  for (int q = 0; q < pattern.n_atoms(); ++q) {
    for (int m = 0; m < mol.n_atoms(); ++m)
      if (atom_compatible(pattern.atoms[q], mol.atoms[m]))
        candidates[q].push_back(m);
    if (candidates[q].empty()) return {};
  }
  SearchState st{pattern, mol, std::move(candidates), {}, {}, {}, {}, first_only};
  st.order = plan_order(pattern, st.candidates);
  st.mapping.assign(pattern.atoms.size(), -1);
  st.used.assign(mol.atoms.size(), 0);
  backtrack(st, 0);
  return std::move(st.results);
}

}  // namespace

bool matches(const Pattern& pattern, const chem::MolGraph& mol) {
  return !all_embeddings(pattern, mol, true).empty();
}

std::vector<AlertHit> match(const Pattern& pattern, const chem::MolGraph& mol) {
  std::vector<std::vector<int>> results = all_embeddings(pattern, mol, false);

  // Deduplicate by matched atom set; keep the lexicographically smallest
  // mapping as the representative, ordered by atom set.
  std::map<std::vector<int>, std::vector<int>> by_set;
  for (const auto& mapping : results) {
    std::vector<int> key = mapping;
    std::sort(key.begin(), key.end());
    auto it = by_set.find(key);
    if (it == by_set.end() || mapping < it->second) by_set[key] = mapping;
  }
  std::vector<AlertHit> hits;
  hits.reserve(by_set.size());
  for (const auto& [key, mapping] : by_set)
    hits.push_back(AlertHit{pattern.id, mapping});
  return hits;
}

std::vector<AlertHit> screen(const chem::MolGraph& mol, const Catalog& catalog) {
  std::vector<AlertHit> all;
  for (const Pattern& p : catalog.patterns) {
    std::vector<AlertHit> hits = match(p, mol);
    all.insert(all.end(), hits.begin(), hits.end());
  }
  return all;
}

}  // namespace stem::alerts
