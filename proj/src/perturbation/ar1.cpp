#include "hbef/perturbation/ar1.hpp"

#include <cmath>
#include <stdexcept>

namespace hbef {

void AR1Config::validate() const {
  if (dt_hours <= 0.0) throw std::invalid_argument("ar1.dt_hours must be > 0");
  if (eta_hours <= 0.0) throw std::invalid_argument("ar1.eta_hours must be > 0");
}

double AR1Config::alpha() const { return std::exp(-dt_hours / eta_hours); }

double AR1Config::beta() const {
  const double a = alpha();
  return std::sqrt(1.0 - a * a);
}

ScalarField RandomFieldState::field(const SphericalGrid& grid) const {
  if (grid.size() != r.size())
    throw std::invalid_argument("RandomFieldState::field: grid size does not match state");
  return field_from_flat(grid, r);
}

RandomFieldState ar1_init(const SpectrumParams& spectrum, const AR1Config& ar1,
                          const HarmonicBasis& basis, Rng rng, FieldInit mode) {
  spectrum.validate();
  ar1.validate();
  if (basis.L() != spectrum.L)
    throw std::invalid_argument("ar1_init: basis truncation does not match spectrum.L");
  RandomFieldState state{spectrum, ar1, basis, Vector::Zero(basis.n_points()), rng};
  if (mode == FieldInit::stationary) {
    // One innovation draw is already at stationary variance.
    state.r = basis.synthesize(sample_innovation(spectrum, state.rng));
  }
  return state;
}

RandomFieldState ar1_init(const SpectrumParams& spectrum, const AR1Config& ar1,
                          const SphericalGrid& grid, Rng rng, FieldInit mode) {
  return ar1_init(spectrum, ar1, HarmonicBasis::for_grid(grid, spectrum.L), std::move(rng), mode);
}

void ar1_step(RandomFieldState& state) {
  const double alpha = state.ar1.alpha();
  const double beta = state.ar1.beta();
  const Vector eps = state.basis.synthesize(sample_innovation(state.spectrum, state.rng));
  state.r = alpha * state.r + beta * eps;
}

}  // namespace hbef
