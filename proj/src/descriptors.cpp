#include "stem/descriptors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace stem::desc {

namespace {

// BFS distances from one atom; -1 for unreachable.
std::vector<int> bfs_distances(const chem::MolGraph& mol, int start) {
  std::vector<int> dist(mol.atoms.size(), -1);
  std::deque<int> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (auto [u, bi] : mol.adj[v])
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

bool ring_is_aromatic(const chem::MolGraph& mol, const std::vector<int>& ring) {
  const int n = static_cast<int>(ring.size());
  for (int i = 0; i < n; ++i) {
    auto bi = mol.bond_between(ring[i], ring[(i + 1) % n]);
    if (!bi || mol.bonds[*bi].order != chem::BondOrder::Aromatic) return false;
  }
  return true;
}

}  // namespace

const std::vector<std::string>& descriptor_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n = {
        "mol_weight", "heavy_atom_count", "bond_count", "ring_count",
        "aromatic_ring_count",
    };
    for (const auto& e : chem::element_vocabulary()) n.push_back("count_" + e);
    n.insert(n.end(), {"hbd_proxy", "hba_proxy", "wiener_index", "zagreb_m1",
                       "zagreb_m2", "randic_index", "graph_radius",
                       "graph_diameter", "fraction_csp3"});
    return n;
  }();
  return names;
}

DescriptorVector compute_descriptors(const chem::MolGraph& mol) {
  const auto& vocab = chem::element_vocabulary();
  const int n = mol.n_atoms();

  double weight = 0.0;
  std::vector<double> element_counts(vocab.size(), 0.0);
  double hbd = 0.0, hba = 0.0;
  int sp3_carbons = 0, carbons = 0;
  for (const chem::Atom& atom : mol.atoms) {
    double mass = 12.011;
    try {
      mass = chem::atomic_mass(atom.element);
    } catch (const Error&) {
      // unknown mass (wildcards in hand-built graphs): treat as carbon
    }
    weight += mass + (atom.implicit_h + atom.explicit_h) * 1.008;
    std::size_t slot = vocab.size() - 1;
    for (std::size_t i = 0; i + 1 < vocab.size(); ++i)
      if (vocab[i] == atom.element) slot = i;
    element_counts[slot] += 1.0;
    if (atom.element == "N" || atom.element == "O") {
      hba += 1.0;
      if (atom.implicit_h + atom.explicit_h > 0) hbd += 1.0;
    }
    if (atom.element == "C") {
      ++carbons;
      bool single_only = !atom.is_aromatic;
      for (auto [u, bi] : mol.adj[&atom - mol.atoms.data()])
        if (mol.bonds[bi].order != chem::BondOrder::Single) single_only = false;
      if (single_only) ++sp3_carbons;
    }
  }

  double wiener = 0.0;
  int radius = 0, diameter = 0;
  if (n > 0) {
    std::vector<int> eccentricity(n, 0);
    for (int i = 0; i < n; ++i) {
      std::vector<int> dist = bfs_distances(mol, i);
      for (int j = 0; j < n; ++j) {
        if (dist[j] < 0) continue;
        if (j > i) wiener += dist[j];
        eccentricity[i] = std::max(eccentricity[i], dist[j]);
      }
    }
    radius = *std::min_element(eccentricity.begin(), eccentricity.end());
    diameter = *std::max_element(eccentricity.begin(), eccentricity.end());
  }

  double zagreb1 = 0.0;
  for (const chem::Atom& atom : mol.atoms)
    zagreb1 += static_cast<double>(atom.degree) * atom.degree;
  double zagreb2 = 0.0, randic = 0.0;
  for (const chem::Bond& b : mol.bonds) {
    const double du = mol.atoms[b.a].degree;
    const double dv = mol.atoms[b.b].degree;
    zagreb2 += du * dv;
    randic += 1.0 / std::sqrt(du * dv);
  }

  int aromatic_rings = 0;
  for (const auto& ring : mol.rings)
    if (ring_is_aromatic(mol, ring)) ++aromatic_rings;

  DescriptorVector out;
  out.values = {weight, static_cast<double>(n),
                static_cast<double>(mol.n_bonds()),
                static_cast<double>(mol.rings.size()),
                static_cast<double>(aromatic_rings)};
  out.values.insert(out.values.end(), element_counts.begin(),
                    element_counts.end());
  out.values.insert(
      out.values.end(),
      {hbd, hba, wiener, zagreb1, zagreb2, randic,
       static_cast<double>(radius), static_cast<double>(diameter),
       carbons > 0 ? static_cast<double>(sp3_carbons) / carbons : 0.0});
  return out;
}

ScalerState fit_filter_scale(const Matrix& train, double variance_threshold) {
  if (train.rows() < 2)
    throw Error("fit_filter_scale needs at least 2 rows");
  ScalerState state;
  state.input_width = train.cols();
  state.variance_threshold = variance_threshold;
  const std::size_t n = train.rows();
  for (std::size_t c = 0; c < train.cols(); ++c) {
    bool finite = true;
    double mean = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < n; ++r) {
      const double v = train(r, c);
      if (!std::isfinite(v)) {
        finite = false;
        break;
      }
      mean += v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (!finite) continue;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double d = train(r, c) - mean;
      var += d * d;
    }
    var /= static_cast<double>(n);
    if (var < variance_threshold || lo == hi) continue;
    state.kept_columns.push_back(static_cast<int>(c));
    state.col_min.push_back(lo);
    state.col_max.push_back(hi);
  }
  if (state.kept_columns.empty())
    throw EmptyAfterFilter("no descriptor columns survived the variance filter");
  return state;
}

Matrix apply_scale(const ScalerState& state, const Matrix& rows) {
  if (rows.cols() != state.input_width)
    throw SchemaMismatch("apply_scale: expected " +
                         std::to_string(state.input_width) + " columns, got " +
                         std::to_string(rows.cols()));
  Matrix out(rows.rows(), state.kept_columns.size());
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    for (std::size_t k = 0; k < state.kept_columns.size(); ++k) {
      const double v = rows(r, static_cast<std::size_t>(state.kept_columns[k]));
      const double scaled =
          (v - state.col_min[k]) / (state.col_max[k] - state.col_min[k]);
      out(r, k) = std::clamp(scaled, 0.0, 1.0);
    }
  }
  return out;
}

}  // namespace stem::desc
