#pragma once

#include <string>
#include <vector>

#include "stem/chem.hpp"
#include "stem/error.hpp"
#include "stem/matrix.hpp"

namespace stem::desc {

class EmptyAfterFilter : public Error {
 public:
  using Error::Error;
};

struct DescriptorVector {
  std::vector<double> values;  // aligned with descriptor_names()
};

// Fixed descriptor schema: constitutional counts, element counts, H-bond
// donor/acceptor proxies, and the classical topological indices (Wiener,
// Zagreb, Randic, radius/diameter, sp3 carbon fraction).
const std::vector<std::string>& descriptor_names();

DescriptorVector compute_descriptors(const chem::MolGraph& mol);

// Min-max scaler with variance filtering, fit on training rows only.
struct ScalerState {
  std::size_t input_width = 0;
  double variance_threshold = 0.05;
  std::vector<int> kept_columns;
  std::vector<double> col_min;  // per kept column
  std::vector<double> col_max;
};

// Drops columns containing any non-finite value, then columns whose
// population variance falls below the threshold (constant columns are
// always dropped), and records min/max of the survivors.
ScalerState fit_filter_scale(const Matrix& train,
                             double variance_threshold = 0.05);

// Maps kept columns through (x - min) / (max - min), clipping to [0, 1].
Matrix apply_scale(const ScalerState& state, const Matrix& rows);

}  // namespace stem::desc
