#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "stem/descriptors.hpp"
#include "stem/rng.hpp"
#include "testutil.hpp"

using namespace stem;
using namespace stem::desc;
using stem::chem::parse_smiles;

static double value_of(const DescriptorVector& d, const std::string& name) {
  const auto& names = descriptor_names();
  auto it = std::find(names.begin(), names.end(), name);
  REQUIRE(it != names.end());
  return d.values[static_cast<std::size_t>(it - names.begin())];
}

// Oracle: Wiener index from a Floyd-Warshall distance matrix.
static double wiener_brute_force(const chem::MolGraph& mol) {
  const int n = mol.n_atoms();
  const double inf = 1e18;
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& b : mol.bonds) d[b.a][b.b] = d[b.b][b.a] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  double sum = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d[i][j] < inf) sum += d[i][j];
  return sum;
}

TEST_CASE("methane molecular weight") {
  DescriptorVector d = compute_descriptors(parse_smiles("C"));
  CHECK(value_of(d, "mol_weight") == doctest::Approx(16.043).epsilon(1e-6));
  CHECK(value_of(d, "fraction_csp3") == 1.0);
  CHECK(value_of(d, "graph_radius") == 0.0);
  CHECK(value_of(d, "graph_diameter") == 0.0);
  CHECK(value_of(d, "randic_index") == 0.0);
}

TEST_CASE("propane Wiener index") {
  DescriptorVector d = compute_descriptors(parse_smiles("CCC"));
  CHECK(value_of(d, "wiener_index") == 4.0);  // distances 1 + 1 + 2
  CHECK(value_of(d, "zagreb_m1") == 1 + 4 + 1);
  CHECK(value_of(d, "zagreb_m2") == 2 + 2);
}

TEST_CASE("benzene counts") {
  DescriptorVector d = compute_descriptors(parse_smiles("c1ccccc1"));
  CHECK(value_of(d, "ring_count") == 1.0);
  CHECK(value_of(d, "aromatic_ring_count") == 1.0);
  CHECK(value_of(d, "heavy_atom_count") == 6.0);
  CHECK(value_of(d, "count_C") == 6.0);
  CHECK(value_of(d, "fraction_csp3") == 0.0);
  CHECK(value_of(d, "graph_radius") == 3.0);
  CHECK(value_of(d, "graph_diameter") == 3.0);
}

TEST_CASE("hydrogen bond proxies") {
  DescriptorVector d = compute_descriptors(parse_smiles("NCCO"));
  CHECK(value_of(d, "hbd_proxy") == 2.0);
  CHECK(value_of(d, "hba_proxy") == 2.0);
  DescriptorVector ester = compute_descriptors(parse_smiles("CC(=O)OC"));
  CHECK(value_of(ester, "hbd_proxy") == 0.0);
  CHECK(value_of(ester, "hba_proxy") == 2.0);
}

TEST_CASE("Wiener matches distance-matrix brute force on random graphs") {
  Rng rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_int(12));
    chem::MolGraph mol = testutil::random_molgraph(rng, n);
    DescriptorVector d = compute_descriptors(mol);
    CHECK(value_of(d, "wiener_index") == wiener_brute_force(mol));
  }
}

TEST_CASE("descriptor vector is deterministic and schema-aligned") {
  DescriptorVector a = compute_descriptors(parse_smiles("CC(=O)Nc1ccc(O)cc1"));
  DescriptorVector b = compute_descriptors(parse_smiles("CC(=O)Nc1ccc(O)cc1"));
  CHECK(a.values == b.values);
  CHECK(a.values.size() == descriptor_names().size());
}

TEST_CASE("variance filter") {
  SUBCASE("constant column dropped") {
    Matrix m(4, 2);
    for (int r = 0; r < 4; ++r) {
      m(r, 0) = 7.0;          // constant
      m(r, 1) = r % 2;        // balanced 0/1, variance 0.25
    }
    ScalerState s = fit_filter_scale(m);
    REQUIRE(s.kept_columns == std::vector<int>{1});
    Matrix scaled = apply_scale(s, m);
    for (int r = 0; r < 4; ++r)
      CHECK((scaled(r, 0) == 0.0 || scaled(r, 0) == 1.0));
  }
  SUBCASE("NaN column dropped regardless of variance") {
    Matrix m(3, 2);
    m(0, 0) = 0;
    m(1, 0) = std::numeric_limits<double>::quiet_NaN();
    m(2, 0) = 100;
    m(0, 1) = 0;
    m(1, 1) = 5;
    m(2, 1) = 10;
    ScalerState s = fit_filter_scale(m);
    CHECK(s.kept_columns == std::vector<int>{1});
  }
  SUBCASE("low variance dropped") {
    Matrix m(4, 1);
    m(0, 0) = 0.0;
    m(1, 0) = 0.1;
    m(2, 0) = 0.0;
    m(3, 0) = 0.1;  // variance 0.0025 < 0.05
    CHECK_THROWS_AS(fit_filter_scale(m), EmptyAfterFilter);
  }
  SUBCASE("needs two rows") {
    Matrix m(1, 1);
    CHECK_THROWS_AS(fit_filter_scale(m), Error);
  }
}

TEST_CASE("min-max scaling endpoints, midpoint and clipping") {
  Matrix train(3, 1);
  train(0, 0) = 2.0;
  train(1, 0) = 6.0;
  train(2, 0) = 4.0;
  ScalerState s = fit_filter_scale(train, 0.01);
  Matrix test(4, 1);
  test(0, 0) = 2.0;   // min -> 0
  test(1, 0) = 6.0;   // max -> 1
  test(2, 0) = 4.0;   // midpoint -> 0.5
  test(3, 0) = 0.0;   // below min -> clipped to 0
  Matrix out = apply_scale(s, test);
  CHECK(out(0, 0) == 0.0);
  CHECK(out(1, 0) == 1.0);
  CHECK(out(2, 0) == 0.5);
  CHECK(out(3, 0) == 0.0);

  // train scaled onto itself stays within [0,1]
  Matrix self = apply_scale(s, train);
  for (std::size_t r = 0; r < self.rows(); ++r) {
    CHECK(self(r, 0) >= 0.0);
    CHECK(self(r, 0) <= 1.0);
  }
}

TEST_CASE("schema mismatch raises") {
  Matrix train(2, 2);
  train(0, 0) = 0;
  train(1, 0) = 1;
  train(0, 1) = 1;
  train(1, 1) = 0;
  ScalerState s = fit_filter_scale(train, 0.01);
  Matrix wrong(2, 3);
  CHECK_THROWS_AS(apply_scale(s, wrong), SchemaMismatch);
}

TEST_CASE("fit on train only, applied identically to train and test") {
  Rng rng(7);
  Matrix train(20, 5), test(10, 5);
  for (std::size_t r = 0; r < train.rows(); ++r)
    for (std::size_t c = 0; c < 5; ++c) train(r, c) = rng.uniform(0, 10);
  for (std::size_t r = 0; r < test.rows(); ++r)
    for (std::size_t c = 0; c < 5; ++c) test(r, c) = rng.uniform(-5, 15);
  ScalerState s = fit_filter_scale(train, 0.05);
  Matrix train_scaled = apply_scale(s, train);
  Matrix test_scaled = apply_scale(s, test);
  CHECK(train_scaled.cols() == test_scaled.cols());
  for (double v : train_scaled.data()) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  for (double v : test_scaled.data()) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}
