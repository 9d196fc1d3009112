#include "stem/chem.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <deque>
#include <map>
#include <unordered_map>

namespace stem::chem {

namespace {

const std::unordered_map<std::string, double>& mass_table() {
  static const std::unordered_map<std::string, double> table = {
      {"H", 1.008},   {"B", 10.811},  {"C", 12.011},  {"N", 14.007},
      {"O", 15.999},  {"F", 18.998},  {"Na", 22.990}, {"Mg", 24.305},
      {"Al", 26.982}, {"Si", 28.086}, {"P", 30.974},  {"S", 32.065},
      {"Cl", 35.453}, {"K", 39.098},  {"Ca", 40.078}, {"Ti", 47.867},
      {"Cr", 51.996}, {"Mn", 54.938}, {"Fe", 55.845}, {"Co", 58.933},
      {"Ni", 58.693}, {"Cu", 63.546}, {"Zn", 65.38},  {"As", 74.922},
      {"Se", 78.971}, {"Br", 79.904}, {"Ag", 107.868}, {"Cd", 112.411},
      {"Sn", 118.710}, {"Sb", 121.760}, {"Te", 127.60}, {"I", 126.904},
      {"Ba", 137.327}, {"Pt", 195.084}, {"Au", 196.967}, {"Hg", 200.592},
      {"Pb", 207.2},
  };
  return table;
}

bool known_element(const std::string& sym) {
  return mass_table().count(sym) > 0;
}

int default_valence(const std::string& element) {
  if (element == "C") return 4;
  if (element == "N") return 3;
  if (element == "O") return 2;
  if (element == "S") return 2;
  if (element == "B") return 3;
  if (element == "P") return 3;
  if (element == "Si") return 4;
  if (element == "F" || element == "Cl" || element == "Br" || element == "I")
    return 1;
  return 0;  // no implicit hydrogens for anything else
}

struct ParserOptions {
  bool allow_wildcards = false;
  bool assign_implicit_h = true;
  bool require_aromatic_rings = true;
};

struct RingOpening {
  int atom = -1;
  std::optional<BondOrder> bond;
  std::size_t offset = 0;
};

void build_adjacency(MolGraph& mol) {
    mol.adj.assign(mol.atoms.size(), {});
    for (int i = 0; i < mol.n_bonds(); ++i) {
      const Bond& b = mol.bonds[i];
      mol.adj[b.a].push_back({b.b, i});
      mol.adj[b.b].push_back({b.a, i});
    }
    for (int i = 0; i < mol.n_atoms(); ++i)
      mol.atoms[i].degree = static_cast<int>(mol.adj[i].size());
  }

  // Smallest set of smallest rings: collect the shortest cycle through each
  // bond, then greedily keep cycles that are GF(2)-independent in edge space
  // until the cyclomatic number is reached.
void perceive_rings(MolGraph& mol) {
    mol.rings.clear();
    const int n = mol.n_atoms();
    const int m = mol.n_bonds();
    int components = 0;
    {
      std::vector<int> seen(n, 0);
      for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++components;
        std::deque<int> queue{i};
        seen[i] = 1;
        while (!queue.empty()) {
          int v = queue.front();
          queue.pop_front();
          for (auto [u, bi] : mol.adj[v])
            if (!seen[u]) {
              seen[u] = 1;
              queue.push_back(u);
            }
        }
      }
    }
    const int cyclomatic = m - n + components;
    if (cyclomatic <= 0) return;

    struct Candidate {
      std::vector<int> atoms;
      std::vector<bool> edge_mask;
      std::string key;
    };
    std::vector<Candidate> candidates;
    std::vector<std::string> seen_keys;
    for (int skip = 0; skip < m; ++skip) {
      const int src = mol.bonds[skip].a;
      const int dst = mol.bonds[skip].b;
      // BFS from src to dst avoiding the skipped bond
      std::vector<int> parent(n, -2);
      parent[src] = -1;
      std::deque<int> queue{src};
      while (!queue.empty() && parent[dst] == -2) {
        int v = queue.front();
        queue.pop_front();
        for (auto [u, bi] : mol.adj[v]) {
          if (bi == skip || parent[u] != -2) continue;
          parent[u] = v;
          queue.push_back(u);
        }
      }
      if (parent[dst] == -2) continue;  // bridge bond, no cycle
      std::vector<int> cycle;
      for (int v = dst; v != -1; v = parent[v]) cycle.push_back(v);
      Candidate cand;
      cand.atoms = cycle;
      cand.edge_mask.assign(m, false);
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        int a = cycle[i];
        int b = cycle[(i + 1) % cycle.size()];
        cand.edge_mask[*mol.bond_between(a, b)] = true;
      }
      std::string key(m, '0');
      for (int i = 0; i < m; ++i)
        if (cand.edge_mask[i]) key[i] = '1';
      if (std::find(seen_keys.begin(), seen_keys.end(), key) != seen_keys.end())
        continue;
      seen_keys.push_back(key);
      cand.key = std::move(key);
      candidates.push_back(std::move(cand));
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& x, const Candidate& y) {
                if (x.atoms.size() != y.atoms.size())
                  return x.atoms.size() < y.atoms.size();
                return x.key < y.key;
              });

    std::vector<std::vector<bool>> basis;  // row-reduced, leading edge index order
    auto reduce = [&](std::vector<bool> vec) {
      for (const auto& row : basis) {
        int lead = -1;
        for (int i = 0; i < m; ++i)
          if (row[i]) {
            lead = i;
            break;
          }
        if (lead >= 0 && vec[lead])
          for (int i = 0; i < m; ++i) vec[i] = vec[i] != row[i];
      }
      return vec;
    };
    for (const Candidate& cand : candidates) {
      if (static_cast<int>(mol.rings.size()) == cyclomatic) break;
      std::vector<bool> reduced = reduce(cand.edge_mask);
      if (std::none_of(reduced.begin(), reduced.end(), [](bool b) { return b; }))
        continue;  // dependent on already-chosen rings
      basis.push_back(std::move(reduced));
      mol.rings.push_back(cand.atoms);
    }

    for (const auto& ring : mol.rings)
      for (int a : ring) mol.atoms[a].in_ring = true;
  }


class Parser {
 public:
  Parser(const std::string& s, const ParserOptions& opt) : s_(s), opt_(opt) {}

  MolGraph run() {
    if (s_.empty())
      throw ParseError(ParseErrorKind::InvalidSyntax, 0, "empty SMILES string");
    while (pos_ < s_.size()) step();
    finish();
    return std::move(mol_);
  }

 private:
  [[noreturn]] void fail(ParseErrorKind kind, std::size_t offset,
                         const std::string& msg) {
    throw ParseError(kind, offset, msg);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void step() {
    const char c = s_[pos_];
    switch (c) {
      case '(': {
        if (prev_atom_ < 0)
          fail(ParseErrorKind::InvalidSyntax, pos_, "branch opened before any atom");
        if (after_open_paren_ || pending_bond_)
          fail(ParseErrorKind::InvalidSyntax, pos_, "branch must start with an atom");
        branch_stack_.push_back({prev_atom_, pos_});
        after_open_paren_ = true;
        ++pos_;
        return;
      }
      case ')': {
        if (branch_stack_.empty())
          fail(ParseErrorKind::UnbalancedParenthesis, pos_,
               "')' without matching '('");
        if (pending_bond_)
          fail(ParseErrorKind::InvalidSyntax, pos_, "dangling bond before ')'");
        if (after_open_paren_)
          fail(ParseErrorKind::InvalidSyntax, pos_, "empty branch");
        prev_atom_ = branch_stack_.back().first;
        branch_stack_.pop_back();
        ++pos_;
        return;
      }
      case '-': set_bond(BondOrder::Single); return;
      case '=': set_bond(BondOrder::Double); return;
      case '#': set_bond(BondOrder::Triple); return;
      case ':': set_bond(BondOrder::Aromatic); return;
      case '/':
      case '\\':
        fail(ParseErrorKind::UnsupportedToken, pos_,
             "stereo bond markers are not supported");
      case '@':
        fail(ParseErrorKind::UnsupportedToken, pos_,
             "chirality markers are not supported");
      case '.':
        fail(ParseErrorKind::UnsupportedToken, pos_,
             "disconnected components ('.') are not supported");
      case '*': {
        if (!opt_.allow_wildcards)
          fail(ParseErrorKind::UnsupportedToken, pos_,
               "wildcard atoms are not supported in molecule SMILES");
        add_atom("ANY", false, 0, 0, true, pos_);
        ++pos_;
        return;
      }
      case '%': {
        if (pos_ + 2 >= s_.size() || !std::isdigit(s_[pos_ + 1]) ||
            !std::isdigit(s_[pos_ + 2]))
          fail(ParseErrorKind::InvalidSyntax, pos_, "'%' needs two digits");
        ring_bond((s_[pos_ + 1] - '0') * 10 + (s_[pos_ + 2] - '0'), pos_);
        pos_ += 3;
        return;
      }
      case '[': parse_bracket(); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ring_bond(c - '0', pos_);
      ++pos_;
      return;
    }
    if (std::isspace(static_cast<unsigned char>(c)))
      fail(ParseErrorKind::UnsupportedToken, pos_, "whitespace inside SMILES");
    parse_organic_atom();
  }

  void set_bond(BondOrder order) {
    if (pending_bond_)
      fail(ParseErrorKind::InvalidSyntax, pos_, "two consecutive bond symbols");
    if (prev_atom_ < 0)
      fail(ParseErrorKind::InvalidSyntax, pos_, "bond symbol before any atom");
    pending_bond_ = order;
    pending_bond_offset_ = pos_;
    ++pos_;
  }

  void parse_organic_atom() {
    const std::size_t at = pos_;
    const char c = s_[pos_];
    if (std::islower(static_cast<unsigned char>(c))) {
      static const std::string aromatic_ok = "bcnops";
      if (aromatic_ok.find(c) == std::string::npos)
        fail(ParseErrorKind::UnknownElement, at,
             std::string("unknown aromatic atom '") + c + "'");
      std::string sym(1, static_cast<char>(std::toupper(c)));
      ++pos_;
      add_atom(sym, true, 0, 0, false, at);
      return;
    }
    if (!std::isupper(static_cast<unsigned char>(c)))
      fail(ParseErrorKind::UnsupportedToken, at,
           std::string("unexpected character '") + c + "'");
    std::string sym(1, c);
    // two-character organic-subset symbols
    if ((c == 'C' && pos_ + 1 < s_.size() && s_[pos_ + 1] == 'l') ||
        (c == 'B' && pos_ + 1 < s_.size() && s_[pos_ + 1] == 'r')) {
      sym += s_[pos_ + 1];
      pos_ += 2;
    } else {
      static const std::string organic = "BCNOPSFI";
      if (organic.find(c) == std::string::npos)
        fail(ParseErrorKind::UnknownElement, at,
             "'" + sym + "' is not an organic-subset atom; use brackets");
      ++pos_;
    }
    add_atom(sym, false, 0, 0, false, at);
  }

  void parse_bracket() {
    const std::size_t open = pos_;
    ++pos_;  // '['
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail(ParseErrorKind::UnsupportedToken, pos_, "isotope labels are not supported");

    std::string sym;
    bool aromatic = false;
    bool bracket_wildcard = false;
    const std::size_t sym_at = pos_;
    if (peek() == '*') {
      sym = "ANY";
      bracket_wildcard = true;
      ++pos_;
    } else if (s_.compare(pos_, 4, "ANY]") == 0) {
      sym = "ANY";
      bracket_wildcard = true;
      pos_ += 3;
    } else if (s_.compare(pos_, 4, "HAL]") == 0) {
      sym = "HAL";
      bracket_wildcard = true;
      pos_ += 3;
    } else if (std::isupper(static_cast<unsigned char>(peek()))) {
      sym += s_[pos_++];
      if (pos_ < s_.size() && std::islower(static_cast<unsigned char>(s_[pos_])))
        sym += s_[pos_++];
    } else if (std::islower(static_cast<unsigned char>(peek()))) {
      static const std::string aromatic_ok = "bcnops";
      if (aromatic_ok.find(peek()) == std::string::npos)
        fail(ParseErrorKind::UnknownElement, sym_at,
             std::string("unknown aromatic atom '") + peek() + "'");
      sym = std::string(1, static_cast<char>(std::toupper(peek())));
      aromatic = true;
      ++pos_;
    } else {
      fail(ParseErrorKind::InvalidSyntax, pos_, "expected element symbol after '['");
    }
    if (bracket_wildcard && !opt_.allow_wildcards)
      fail(ParseErrorKind::UnsupportedToken, sym_at,
           "wildcard atoms are not supported in molecule SMILES");
    if (!bracket_wildcard) {
      if (sym == "H")
        fail(ParseErrorKind::UnsupportedToken, sym_at,
             "explicit hydrogen atoms are not supported; use H counts");
      if (!known_element(sym))
        fail(ParseErrorKind::UnknownElement, sym_at,
             "unknown element '" + sym + "'");
      if (aromatic) {
        static const std::string aromatic_ok = "BCNOPS";
        if (aromatic_ok.find(sym) == std::string::npos)
          fail(ParseErrorKind::UnknownElement, sym_at,
               "element '" + sym + "' cannot be aromatic");
      }
    }

    if (peek() == '@')
      fail(ParseErrorKind::UnsupportedToken, pos_, "chirality markers are not supported");

    int explicit_h = 0;
    if (peek() == 'H') {
      ++pos_;
      explicit_h = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        explicit_h = 0;
        while (std::isdigit(static_cast<unsigned char>(peek())))
          explicit_h = explicit_h * 10 + (s_[pos_++] - '0');
        if (explicit_h > 9)
          fail(ParseErrorKind::InvalidSyntax, pos_, "implausible H count");
      }
    }

    int charge = 0;
    if (peek() == '+' || peek() == '-') {
      const std::size_t charge_at = pos_;
      const char sign_char = s_[pos_];
      const int sign = sign_char == '+' ? 1 : -1;
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        int mag = 0;
        while (std::isdigit(static_cast<unsigned char>(peek())))
          mag = mag * 10 + (s_[pos_++] - '0');
        charge = sign * mag;
      } else {
        charge = sign;
        while (peek() == sign_char) {  // ++ / -- repetition form
          charge += sign;
          ++pos_;
        }
      }
      if (peek() == '+' || peek() == '-')
        fail(ParseErrorKind::InvalidCharge, charge_at, "mixed charge signs");
      if (charge == 0 || charge > 9 || charge < -9)
        fail(ParseErrorKind::InvalidCharge, charge_at, "charge out of range");
    }

    if (peek() != ']')
      fail(ParseErrorKind::InvalidSyntax, pos_,
           peek() == '\0' ? "unterminated bracket atom" : "unexpected token in bracket atom");
    ++pos_;
    add_atom(sym, aromatic, charge, explicit_h, true, open);
  }

  void add_atom(const std::string& sym, bool aromatic, int charge,
                int explicit_h, bool bracket, std::size_t offset) {
    Atom atom;
    atom.element = sym;
    atom.is_aromatic = aromatic;
    atom.formal_charge = charge;
    atom.explicit_h = explicit_h;
    atom.bracket = bracket;
    atom.src_offset = offset;
    const int idx = mol_.n_atoms();
    mol_.atoms.push_back(atom);
    after_open_paren_ = false;
    if (prev_atom_ >= 0) make_bond(prev_atom_, idx, take_pending_bond(), offset);
    else if (pending_bond_)
      fail(ParseErrorKind::InvalidSyntax, pending_bond_offset_,
           "bond symbol before the first atom of a chain");
    prev_atom_ = idx;
  }

  std::optional<BondOrder> take_pending_bond() {
    auto b = pending_bond_;
    pending_bond_.reset();
    return b;
  }

  void ring_bond(int number, std::size_t offset) {
    if (prev_atom_ < 0)
      fail(ParseErrorKind::InvalidSyntax, offset, "ring closure before any atom");
    auto it = open_rings_.find(number);
    if (it == open_rings_.end()) {
      open_rings_[number] = RingOpening{prev_atom_, take_pending_bond(), offset};
      return;
    }
    RingOpening opening = it->second;
    open_rings_.erase(it);
    if (opening.atom == prev_atom_)
      fail(ParseErrorKind::InvalidSyntax, offset, "ring bond to the same atom");
    std::optional<BondOrder> close_bond = take_pending_bond();
    std::optional<BondOrder> order;
    if (opening.bond && close_bond) {
      if (*opening.bond != *close_bond)
        fail(ParseErrorKind::InvalidSyntax, offset,
             "conflicting bond orders on ring closure");
      order = opening.bond;
    } else if (opening.bond) {
      order = opening.bond;
    } else if (close_bond) {
      order = close_bond;
    }
    make_bond(opening.atom, prev_atom_, order, offset);
  }

  void make_bond(int a, int b, std::optional<BondOrder> order, std::size_t offset) {
    for (const Bond& bond : mol_.bonds) {
      if ((bond.a == a && bond.b == b) || (bond.a == b && bond.b == a))
        fail(ParseErrorKind::InvalidSyntax, offset, "duplicate bond between atoms");
    }
    BondOrder resolved;
    if (order) {
      resolved = *order;
    } else if (mol_.atoms[a].is_aromatic && mol_.atoms[b].is_aromatic) {
      resolved = BondOrder::Aromatic;
    } else {
      resolved = BondOrder::Single;
    }
    mol_.bonds.push_back(Bond{a, b, resolved});
  }

  void finish() {
    if (!branch_stack_.empty())
      fail(ParseErrorKind::UnbalancedParenthesis, branch_stack_.back().second,
           "'(' without matching ')'");
    if (!open_rings_.empty()) {
      const RingOpening& opening = open_rings_.begin()->second;
      fail(ParseErrorKind::UnclosedRingBond, opening.offset,
           "ring bond opened but never closed");
    }
    if (pending_bond_)
      fail(ParseErrorKind::InvalidSyntax, pending_bond_offset_,
           "dangling bond at end of input");

    mol_.source_smiles = s_;
    build_adjacency(mol_);
    perceive_rings(mol_);
    if (opt_.assign_implicit_h) assign_implicit_hydrogens(mol_);
    if (opt_.require_aromatic_rings) check_aromaticity(mol_);
  }

  static void assign_implicit_hydrogens(MolGraph& mol) {
    for (int i = 0; i < mol.n_atoms(); ++i) {
      Atom& atom = mol.atoms[i];
      if (atom.bracket) {
        atom.implicit_h = 0;  // bracket atoms carry their H count explicitly
        continue;
      }
      double order_sum = 0.0;
      for (auto [u, bi] : mol.adj[i])
        order_sum += bond_order_value(mol.bonds[bi].order);
      const int used = static_cast<int>(std::ceil(order_sum - 1e-9));
      const int free_valence = default_valence(atom.element) - used - atom.explicit_h;
      atom.implicit_h = std::max(0, free_valence);
    }
  }

  static void check_aromaticity(const MolGraph& mol) {
    for (int i = 0; i < mol.n_atoms(); ++i) {
      const Atom& atom = mol.atoms[i];
      if (atom.is_aromatic && !atom.in_ring)
        throw ParseError(ParseErrorKind::AromaticityError, atom.src_offset,
                         "aromatic atom is not part of any perceived ring");
    }
    for (const Bond& bond : mol.bonds) {
      if (bond.order != BondOrder::Aromatic) continue;
      bool covered = false;
      for (const auto& ring : mol.rings) {
        for (std::size_t i = 0; i < ring.size() && !covered; ++i) {
          int a = ring[i];
          int b = ring[(i + 1) % ring.size()];
          if ((a == bond.a && b == bond.b) || (a == bond.b && b == bond.a))
            covered = true;
        }
        if (covered) break;
      }
      if (!covered)
        throw ParseError(ParseErrorKind::AromaticityError,
                         mol.atoms[bond.a].src_offset,
                         "aromatic bond is not part of any perceived ring");
    }
  }

  const std::string& s_;
  ParserOptions opt_;
  MolGraph mol_;
  std::size_t pos_ = 0;
  int prev_atom_ = -1;
  std::optional<BondOrder> pending_bond_;
  std::size_t pending_bond_offset_ = 0;
  bool after_open_paren_ = false;
  std::vector<std::pair<int, std::size_t>> branch_stack_;
  std::map<int, RingOpening> open_rings_;
};

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t offset,
                       const std::string& what)
    : Error(std::string(parse_error_kind_name(kind)) + " at offset " +
            std::to_string(offset) + ": " + what),
      kind_(kind),
      offset_(offset) {}

const char* parse_error_kind_name(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::UnbalancedParenthesis: return "UnbalancedParenthesis";
    case ParseErrorKind::UnclosedRingBond: return "UnclosedRingBond";
    case ParseErrorKind::UnknownElement: return "UnknownElement";
    case ParseErrorKind::InvalidCharge: return "InvalidCharge";
    case ParseErrorKind::UnsupportedToken: return "UnsupportedToken";
    case ParseErrorKind::AromaticityError: return "AromaticityError";
    case ParseErrorKind::InvalidSyntax: return "InvalidSyntax";
  }
  return "ParseError";
}

std::optional<int> MolGraph::bond_between(int a, int b) const {
  for (auto [u, bi] : adj[a])
    if (u == b) return bi;
  return std::nullopt;
}

void finalize_graph(MolGraph& mol) {
  build_adjacency(mol);
  for (auto& atom : mol.atoms) atom.in_ring = false;
  perceive_rings(mol);
}

MolGraph relabel_atoms(const MolGraph& mol, const std::vector<int>& perm) {
  MolGraph out;
  out.source_smiles = mol.source_smiles;
  out.atoms.resize(mol.atoms.size());
  std::vector<int> inverse(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out.atoms[i] = mol.atoms[perm[i]];
    inverse[perm[i]] = static_cast<int>(i);
  }
  for (const Bond& b : mol.bonds)
    out.bonds.push_back(Bond{inverse[b.a], inverse[b.b], b.order});
  finalize_graph(out);
  return out;
}

MolGraph parse_smiles(const std::string& smiles) {
  return Parser(smiles, ParserOptions{}).run();
}

MolGraph parse_fragment(const std::string& smiles) {
  ParserOptions opt;
  opt.allow_wildcards = true;
  opt.assign_implicit_h = false;
  opt.require_aromatic_rings = false;
  return Parser(smiles, opt).run();
}

Matrix adjacency(const MolGraph& mol) {
  const std::size_t n = mol.atoms.size();
  Matrix a(n, n, 0.0);
  for (const Bond& b : mol.bonds) {
    a(b.a, b.b) = 1.0;
    a(b.b, b.a) = 1.0;
  }
  return a;
}

const std::vector<std::string>& element_vocabulary() {
  static const std::vector<std::string> vocab = {
      "C", "N", "O", "S", "P", "F", "Cl", "Br", "I", "B", "Si", "other"};
  return vocab;
}

namespace {

constexpr int kDegreeSlots = 6;   // 0..5
constexpr int kChargeSlots = 5;   // -2..2
constexpr int kHCountSlots = 5;   // 0..4

int element_slot(const std::string& element) {
  const auto& vocab = element_vocabulary();
  for (std::size_t i = 0; i + 1 < vocab.size(); ++i)
    if (vocab[i] == element) return static_cast<int>(i);
  return static_cast<int>(vocab.size()) - 1;
}

}  // namespace

int atom_feature_width() {
  return static_cast<int>(element_vocabulary().size()) + kDegreeSlots +
         kChargeSlots + 1 + kHCountSlots + 1;
}

const std::vector<std::string>& atom_feature_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& e : element_vocabulary()) n.push_back("elem_" + e);
    for (int d = 0; d < kDegreeSlots; ++d) n.push_back("degree_" + std::to_string(d));
    for (int q = -2; q <= 2; ++q) n.push_back("charge_" + std::to_string(q));
    n.push_back("aromatic");
    for (int h = 0; h < kHCountSlots; ++h) n.push_back("hcount_" + std::to_string(h));
    n.push_back("in_ring");
    return n;
  }();
  return names;
}

Matrix atom_features(const MolGraph& mol) {
  const int width = atom_feature_width();
  Matrix f(mol.atoms.size(), width, 0.0);
  const int n_elem = static_cast<int>(element_vocabulary().size());
  for (int i = 0; i < mol.n_atoms(); ++i) {
    const Atom& atom = mol.atoms[i];
    int col = 0;
    f(i, col + element_slot(atom.element)) = 1.0;
    col += n_elem;
    f(i, col + std::min(atom.degree, kDegreeSlots - 1)) = 1.0;
    col += kDegreeSlots;
    f(i, col + std::clamp(atom.formal_charge, -2, 2) + 2) = 1.0;
    col += kChargeSlots;
    f(i, col) = atom.is_aromatic ? 1.0 : 0.0;
    col += 1;
    const int total_h = atom.explicit_h + atom.implicit_h;
    f(i, col + std::min(total_h, kHCountSlots - 1)) = 1.0;
    col += kHCountSlots;
    f(i, col) = atom.in_ring ? 1.0 : 0.0;
  }
  return f;
}

double atomic_mass(const std::string& element) {
  auto it = mass_table().find(element);
  if (it == mass_table().end())
    throw Error("no atomic mass for element '" + element + "'");
  return it->second;
}

double bond_order_value(BondOrder order) {
  switch (order) {
    case BondOrder::Single: return 1.0;
    case BondOrder::Double: return 2.0;
    case BondOrder::Triple: return 3.0;
    case BondOrder::Aromatic: return 1.5;
  }
  return 1.0;
}

}  // namespace stem::chem
