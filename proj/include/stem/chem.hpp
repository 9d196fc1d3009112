#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stem/error.hpp"
#include "stem/matrix.hpp"

namespace stem::chem {

enum class BondOrder { Single, Double, Triple, Aromatic };

struct Atom {
  std::string element;       // symbol, e.g. "C", "Cl"; "ANY"/"HAL" in query graphs
  int formal_charge = 0;
  bool is_aromatic = false;  // written lowercase in the input
  int explicit_h = 0;        // H count written inside brackets
  int implicit_h = 0;        // computed from valence rules
  int degree = 0;            // heavy-atom neighbors
  bool in_ring = false;
  bool bracket = false;      // atom came from a [...] token
  std::size_t src_offset = 0;
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::Single;
};

struct MolGraph {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  std::vector<std::vector<int>> rings;  // smallest set of smallest rings, atom indices
  std::string source_smiles;

  // adjacency list: per atom, (neighbor atom index, bond index)
  std::vector<std::vector<std::pair<int, int>>> adj;

  int n_atoms() const { return static_cast<int>(atoms.size()); }
  int n_bonds() const { return static_cast<int>(bonds.size()); }
  std::optional<int> bond_between(int a, int b) const;
};

enum class ParseErrorKind {
  UnbalancedParenthesis,
  UnclosedRingBond,
  UnknownElement,
  InvalidCharge,
  UnsupportedToken,
  AromaticityError,
  InvalidSyntax,
};

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t offset, const std::string& what);
  ParseErrorKind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  ParseErrorKind kind_;
  std::size_t offset_;
};

const char* parse_error_kind_name(ParseErrorKind kind);

// Parse a SMILES string into a molecular graph. Supported grammar:
// organic-subset atoms, bracket atoms with charge and explicit H counts,
// ring closures (digits and %nn), branches, bond symbols - = # :, and
// aromatic lowercase atoms. Stereo markers, isotopes and wildcards are
// rejected. Implicit hydrogens are filled in for organic-subset atoms,
// rings are perceived, and aromatic atoms/bonds are checked to lie on a
// perceived ring.
MolGraph parse_smiles(const std::string& smiles);

// Relaxed parse used for substructure query graphs: wildcard atoms
// ([ANY], [HAL], *) are accepted, aromatic atoms need not close a ring,
// and no implicit hydrogens are assigned.
MolGraph parse_fragment(const std::string& smiles);

// Rebuild adjacency lists, degrees, rings and ring flags for a graph whose
// atoms/bonds were filled in programmatically (generators, relabeling).
void finalize_graph(MolGraph& mol);

// Copy of mol with atoms relabeled so new index i holds old atom perm[i].
MolGraph relabel_atoms(const MolGraph& mol, const std::vector<int>& perm);

// N x N symmetric 0/1 connectivity matrix.
Matrix adjacency(const MolGraph& mol);

// Element vocabulary used for one-hot atom features; last entry is the
// catch-all bucket.
const std::vector<std::string>& element_vocabulary();

// Fixed-width per-atom feature matrix: element one-hot, degree one-hot
// (0-5), formal charge one-hot (clipped to [-2,2]), aromatic flag,
// implicit-H one-hot (0-4), ring flag.
Matrix atom_features(const MolGraph& mol);
const std::vector<std::string>& atom_feature_names();
int atom_feature_width();

// Standard atomic mass for a supported element symbol, hydrogen included.
double atomic_mass(const std::string& element);

double bond_order_value(BondOrder order);  // aromatic counts 1.5

}  // namespace stem::chem
