#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "stem/chem.hpp"
#include "stem/rng.hpp"

using namespace stem;
using namespace stem::chem;

TEST_CASE("single carbon") {
  MolGraph mol = parse_smiles("C");
  REQUIRE(mol.n_atoms() == 1);
  CHECK(mol.atoms[0].element == "C");
  CHECK(mol.atoms[0].implicit_h == 4);
  CHECK(mol.atoms[0].degree == 0);
  CHECK_FALSE(mol.atoms[0].is_aromatic);
  CHECK(mol.n_bonds() == 0);
}

TEST_CASE("benzene") {
  MolGraph mol = parse_smiles("c1ccccc1");
  REQUIRE(mol.n_atoms() == 6);
  REQUIRE(mol.n_bonds() == 6);
  REQUIRE(mol.rings.size() == 1);
  CHECK(mol.rings[0].size() == 6);
  for (const Atom& a : mol.atoms) {
    CHECK(a.element == "C");
    CHECK(a.is_aromatic);
    CHECK(a.in_ring);
    CHECK(a.implicit_h == 1);
  }
  for (const Bond& b : mol.bonds) CHECK(b.order == BondOrder::Aromatic);
}

TEST_CASE("unbalanced parenthesis reports offset") {
  try {
    parse_smiles("C(");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::UnbalancedParenthesis);
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("nitrobenzene charges") {
  MolGraph mol = parse_smiles("O=[N+]([O-])c1ccccc1");
  REQUIRE(mol.n_atoms() == 9);
  int n_plus = 0, o_minus = 0;
  for (const Atom& a : mol.atoms) {
    if (a.element == "N" && a.formal_charge == 1) ++n_plus;
    if (a.element == "O" && a.formal_charge == -1) ++o_minus;
  }
  CHECK(n_plus == 1);
  CHECK(o_minus == 1);
}

TEST_CASE("parse errors carry kind and offset") {
  struct Case {
    const char* smiles;
    ParseErrorKind kind;
  };
  const Case cases[] = {
      {"C1CC", ParseErrorKind::UnclosedRingBond},
      {"[Xq]", ParseErrorKind::UnknownElement},
      {"Q", ParseErrorKind::UnknownElement},
      {"[N+-]", ParseErrorKind::InvalidCharge},
      {"C/C=C/C", ParseErrorKind::UnsupportedToken},
      {"C[C@H](N)O", ParseErrorKind::UnsupportedToken},
      {"[13C]", ParseErrorKind::UnsupportedToken},
      {"C*", ParseErrorKind::UnsupportedToken},
      {"CC.O", ParseErrorKind::UnsupportedToken},
      {"cc", ParseErrorKind::AromaticityError},
      {")C", ParseErrorKind::UnbalancedParenthesis},
      {"C((C))", ParseErrorKind::InvalidSyntax},
  };
  for (const Case& c : cases) {
    CAPTURE(c.smiles);
    CHECK_THROWS_AS(parse_smiles(c.smiles), ParseError);
    try {
      parse_smiles(c.smiles);
    } catch (const ParseError& e) {
      CHECK(e.kind() == c.kind);
    }
  }
}

TEST_CASE("adjacency matrix") {
  SUBCASE("benzene rows sum to 2") {
    Matrix a = adjacency(parse_smiles("c1ccccc1"));
    for (std::size_t i = 0; i < 6; ++i) {
      double row = 0;
      for (std::size_t j = 0; j < 6; ++j) {
        row += a(i, j);
        CHECK(a(i, j) == a(j, i));
      }
      CHECK(row == 2.0);
      CHECK(a(i, i) == 0.0);
    }
  }
  SUBCASE("methane is 1x1 zero") {
    Matrix a = adjacency(parse_smiles("C"));
    REQUIRE(a.rows() == 1);
    CHECK(a(0, 0) == 0.0);
  }
  SUBCASE("ethanol path graph") {
    Matrix a = adjacency(parse_smiles("CCO"));
    double sums[3] = {0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) sums[i] += a(i, j);
    CHECK(sums[0] == 1.0);
    CHECK(sums[1] == 2.0);
    CHECK(sums[2] == 1.0);
  }
}

TEST_CASE("atom features schema") {
  REQUIRE(atom_feature_width() ==
          static_cast<int>(atom_feature_names().size()));
  const auto& names = atom_feature_names();

  auto col = [&](const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    REQUIRE(it != names.end());
    return static_cast<std::size_t>(it - names.begin());
  };

  SUBCASE("methane") {
    Matrix f = atom_features(parse_smiles("C"));
    REQUIRE(f.cols() == static_cast<std::size_t>(atom_feature_width()));
    CHECK(f(0, col("elem_C")) == 1.0);
    CHECK(f(0, col("degree_0")) == 1.0);
    CHECK(f(0, col("hcount_4")) == 1.0);
    CHECK(f(0, col("aromatic")) == 0.0);
    CHECK(f(0, col("charge_0")) == 1.0);
  }
  SUBCASE("benzene carbon") {
    Matrix f = atom_features(parse_smiles("c1ccccc1"));
    CHECK(f(0, col("aromatic")) == 1.0);
    CHECK(f(0, col("in_ring")) == 1.0);
    CHECK(f(0, col("degree_2")) == 1.0);
  }
  SUBCASE("deterministic across parses") {
    Matrix f1 = atom_features(parse_smiles("O=[N+]([O-])c1ccccc1"));
    Matrix f2 = atom_features(parse_smiles("O=[N+]([O-])c1ccccc1"));
    CHECK(f1.data() == f2.data());
  }
  SUBCASE("one-hot groups have exactly one bit") {
    for (const char* smiles : {"CC(=O)Oc1ccccc1C(=O)O", "[NH4+]", "C#N",
                               "c1ccc2ccccc2c1", "CC(C)(C)Br"}) {
      Matrix f = atom_features(parse_smiles(smiles));
      const std::size_t n_elem = element_vocabulary().size();
      for (std::size_t i = 0; i < f.rows(); ++i) {
        auto group_sum = [&](std::size_t from, std::size_t len) {
          double s = 0;
          for (std::size_t j = from; j < from + len; ++j) s += f(i, j);
          return s;
        };
        CHECK(group_sum(0, n_elem) == 1.0);              // element
        CHECK(group_sum(n_elem, 6) == 1.0);              // degree
        CHECK(group_sum(n_elem + 6, 5) == 1.0);          // charge
        CHECK(group_sum(n_elem + 6 + 5 + 1, 5) == 1.0);  // H count
      }
    }
  }
}

TEST_CASE("implicit hydrogen valence rule") {
  auto h = [](const std::string& smiles, int atom) {
    MolGraph m = parse_smiles(smiles);
    return m.atoms[atom].implicit_h;
  };
  CHECK(h("N", 0) == 3);
  CHECK(h("O", 0) == 2);
  CHECK(h("C=O", 0) == 2);   // formaldehyde carbon
  CHECK(h("C=O", 1) == 0);
  CHECK(h("C#N", 1) == 0);
  CHECK(h("CS(=O)(=O)C", 1) == 0);  // hypervalent sulfur has no free valence
  CHECK(h("c1ccncc1", 3) == 0);     // pyridine nitrogen
  CHECK(h("[NH4+]", 0) == 0);       // bracket atoms never gain implicit H
  MolGraph m = parse_smiles("[NH4+]");
  CHECK(m.atoms[0].explicit_h == 4);
}

TEST_CASE("bracket explicit hydrogens and pyrrole") {
  MolGraph m = parse_smiles("c1cc[nH]c1");
  REQUIRE(m.n_atoms() == 5);
  CHECK(m.atoms[3].element == "N");
  CHECK(m.atoms[3].is_aromatic);
  CHECK(m.atoms[3].explicit_h == 1);
  CHECK(m.atoms[3].implicit_h == 0);
}

TEST_CASE("fused rings get two SSSR rings") {
  MolGraph m = parse_smiles("c1ccc2ccccc2c1");  // naphthalene
  REQUIRE(m.rings.size() == 2);
  CHECK(m.rings[0].size() == 6);
  CHECK(m.rings[1].size() == 6);
  int shared = 0;
  std::set<int> first(m.rings[0].begin(), m.rings[0].end());
  for (int a : m.rings[1]) shared += first.count(a);
  CHECK(shared == 2);
}

TEST_CASE("deterministic parsing produces identical graphs") {
  const std::string smiles = "CC(=O)Nc1ccc(O)cc1";
  MolGraph a = parse_smiles(smiles);
  MolGraph b = parse_smiles(smiles);
  REQUIRE(a.n_atoms() == b.n_atoms());
  REQUIRE(a.n_bonds() == b.n_bonds());
  for (int i = 0; i < a.n_atoms(); ++i) {
    CHECK(a.atoms[i].element == b.atoms[i].element);
    CHECK(a.atoms[i].implicit_h == b.atoms[i].implicit_h);
    CHECK(a.atoms[i].in_ring == b.atoms[i].in_ring);
  }
  CHECK(a.rings == b.rings);
}

TEST_CASE("degree sum equals twice bond count") {
  const char* corpus[] = {
      "C",      "CCO",        "c1ccccc1",  "O=[N+]([O-])c1ccccc1",
      "C1CCCCC1", "c1ccc2ccccc2c1", "CC(C)C(=O)O", "N#Cc1ccccc1",
      "CC(=O)Nc1ccc(O)cc1", "ClC(Cl)(Cl)Cl"};
  for (const char* s : corpus) {
    MolGraph m = parse_smiles(s);
    int degree_sum = 0;
    for (const Atom& a : m.atoms) degree_sum += a.degree;
    CHECK(degree_sum == 2 * m.n_bonds());
  }
}

TEST_CASE("ring closure with explicit bond order") {
  MolGraph m = parse_smiles("C=1CCCCC=1");
  bool found_double = false;
  for (const Bond& b : m.bonds)
    if (b.order == BondOrder::Double) found_double = true;
  CHECK(found_double);
  CHECK(m.rings.size() == 1);
  CHECK_THROWS_AS(parse_smiles("C=1CCCCC#1"), ParseError);
}

TEST_CASE("percent ring closures") {
  MolGraph m = parse_smiles("C%12CCCCC%12");
  CHECK(m.rings.size() == 1);
  CHECK(m.rings[0].size() == 6);
}

TEST_CASE("aromatic bonds are covered by rings") {
  MolGraph m = parse_smiles("c1ccccc1-c1ccccc1");  // biphenyl
  CHECK(m.rings.size() == 2);
  // the connecting bond is single, both rings aromatic
  int aromatic_bonds = 0;
  for (const Bond& b : m.bonds)
    if (b.order == BondOrder::Aromatic) ++aromatic_bonds;
  CHECK(aromatic_bonds == 12);
}
