#pragma once

#include <string>
#include <vector>

#include "stem/chem.hpp"
#include "stem/error.hpp"

namespace stem::alerts {

class CatalogLoadError : public Error {
 public:
  using Error::Error;
};

enum class AtomConstraintKind { Element, AnyAtom, AnyHalogen };

struct QueryAtom {
  AtomConstraintKind kind = AtomConstraintKind::Element;
  std::string element;          // meaningful for kind == Element
  bool require_aromatic = false;  // Element atoms: lowercase in the pattern
  bool charge_constrained = false;  // bracket atoms pin the formal charge
  int charge = 0;
};

struct QueryBond {
  int a = 0;
  int b = 0;
  chem::BondOrder order = chem::BondOrder::Single;
};

// A small connected query graph, typically built from pattern SMILES.
// Wildcard atoms [ANY] / [HAL] (or bare *) match any atom / any halogen.
struct Pattern {
  std::string id;
  std::string name;
  std::vector<QueryAtom> atoms;
  std::vector<QueryBond> bonds;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, bond index)

  int n_atoms() const { return static_cast<int>(atoms.size()); }
};

struct AlertHit {
  std::string pattern_id;
  std::vector<int> mapping;  // mapping[query atom] = molecule atom
};

struct Catalog {
  std::vector<Pattern> patterns;
  std::string source_text;  // verbatim file content, hashed into bundles
};

// Convert a parsed fragment into a query pattern. Atoms written in brackets
// constrain the formal charge; element atoms constrain aromaticity by case.
Pattern make_pattern(const std::string& id, const std::string& name,
                     const chem::MolGraph& fragment);

Pattern parse_pattern(const std::string& id, const std::string& smiles);

// Pattern file: one `NAME<TAB>PATTERN_SMILES` per line, `#` comments.
// A NAME of the form `ID_description` keeps `ID` as the pattern id; several
// lines may share one id (their hits are unioned).
Catalog parse_catalog(const std::string& text);
Catalog load_catalog(const std::string& path);

// All embeddings of the pattern in the molecule, deduplicated by matched
// atom set, in a deterministic order. Backtracking search with
// rarest-candidate-first ordering and adjacency-consistency pruning.
std::vector<AlertHit> match(const Pattern& pattern, const chem::MolGraph& mol);

// Existence check with early exit; equivalent to !match(...).empty().
bool matches(const Pattern& pattern, const chem::MolGraph& mol);

// Union of match() over the catalog, in catalog order.
std::vector<AlertHit> screen(const chem::MolGraph& mol, const Catalog& catalog);

bool atom_compatible(const QueryAtom& q, const chem::Atom& a);

}  // namespace stem::alerts
