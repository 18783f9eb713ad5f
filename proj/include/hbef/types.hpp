#pragma once

#include <Eigen/Core>

namespace hbef {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Grid-shaped storage: row = latitude ring (south to north), column = longitude.
// Row-major so that .reshaped() / Map views agree with the lat-major, lon-minor
// flattening used everywhere (state vectors, field files).
using GridArray = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr double kPi = 3.14159265358979323846;
constexpr double kFourPi = 4.0 * kPi;

}  // namespace hbef
