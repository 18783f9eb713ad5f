#include "hbef/varnet/loss.hpp"

#include <stdexcept>

namespace hbef {

Vector make_element_weights(const SphericalGrid& grid, const Vector& var_weights) {
  for (Index c = 0; c < var_weights.size(); ++c)
    if (var_weights[c] <= 0.0) throw std::invalid_argument("variable weights must be > 0");
  const Vector pw = grid.point_weights();
  Vector w(var_weights.size() * pw.size());
  for (Index c = 0; c < var_weights.size(); ++c) w.segment(c * pw.size(), pw.size()) = var_weights[c] * pw;
  return w;
}

namespace {

void check_shapes(const Matrix& pred, const Matrix& truth, const Vector& elem_weights) {
  if (pred.rows() != truth.rows() || pred.cols() != truth.cols())
    throw std::invalid_argument("weighted_l1: pred/truth shape mismatch");
  if (elem_weights.size() != pred.rows())
    throw std::invalid_argument("weighted_l1: weight length does not match state size");
}

}  // namespace

double weighted_l1(const Matrix& pred, const Matrix& truth, const Vector& elem_weights) {
  check_shapes(pred, truth, elem_weights);
  const double denom = static_cast<double>(pred.rows()) * static_cast<double>(pred.cols());
  return (elem_weights.asDiagonal() * (pred - truth).cwiseAbs()).sum() / denom;
}

Matrix weighted_l1_grad(const Matrix& pred, const Matrix& truth, const Vector& elem_weights) {
  check_shapes(pred, truth, elem_weights);
  const double denom = static_cast<double>(pred.rows()) * static_cast<double>(pred.cols());
  const Matrix sign = (pred - truth).array().sign();
  return (elem_weights / denom).asDiagonal() * sign;
}

double weighted_l1(const std::vector<ScalarField>& pred, const std::vector<ScalarField>& truth,
                   const Vector& var_weights) {
  if (pred.size() != truth.size() || pred.empty())
    throw std::invalid_argument("weighted_l1: field sets must be nonempty and equal-sized");
  if (static_cast<Index>(pred.size()) != var_weights.size())
    throw std::invalid_argument("weighted_l1: one weight per variable required");
  const SphericalGrid& grid = pred[0].grid;
  Matrix p(static_cast<Index>(pred.size()) * grid.size(), 1);
  Matrix t(p.rows(), 1);
  for (std::size_t c = 0; c < pred.size(); ++c) {
    if (!same_grid(pred[c].grid, grid) || !same_grid(truth[c].grid, grid))
      throw std::invalid_argument("weighted_l1: mismatched grids");
    p.col(0).segment(static_cast<Index>(c) * grid.size(), grid.size()) = pred[c].flattened();
    t.col(0).segment(static_cast<Index>(c) * grid.size(), grid.size()) = truth[c].flattened();
  }
  return weighted_l1(p, t, make_element_weights(grid, var_weights));
}

}  // namespace hbef
