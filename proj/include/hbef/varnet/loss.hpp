#pragma once

#include <vector>

#include "hbef/sphere/grid.hpp"
#include "hbef/types.hpp"

namespace hbef {

// Per-element weight w_c * a_h for states flattened variable-major,
// lat-major, lon-minor. var_weights has one entry per variable.
Vector make_element_weights(const SphericalGrid& grid, const Vector& var_weights);

// Latitude-weighted L1 of Eq.-style form: mean over elements of w |pred - truth|,
// averaged over batch columns.
double weighted_l1(const Matrix& pred, const Matrix& truth, const Vector& elem_weights);

// dLoss/dpred for the batch above.
Matrix weighted_l1_grad(const Matrix& pred, const Matrix& truth, const Vector& elem_weights);

// Field-set form: one ScalarField per variable.
double weighted_l1(const std::vector<ScalarField>& pred, const std::vector<ScalarField>& truth,
                   const Vector& var_weights);

struct LossBreakdown {
  double l1 = 0.0;
  double kl = 0.0;
  double total = 0.0;
};

}  // namespace hbef
