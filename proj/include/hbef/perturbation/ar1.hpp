#pragma once

#include "hbef/rng.hpp"
#include "hbef/sphere/grid.hpp"
#include "hbef/sphere/harmonics.hpp"
#include "hbef/sphere/spectrum.hpp"
#include "hbef/types.hpp"

namespace hbef {

// AR(1) discretization of an Ornstein-Uhlenbeck process:
// alpha = exp(-dt/eta), beta = sqrt(1 - alpha^2), so the stationary marginal
// variance equals the innovation variance.
struct AR1Config {
  double dt_hours = 6.0;
  double eta_hours = 24.0;

  void validate() const;
  double alpha() const;
  double beta() const;
};

enum class FieldInit { stationary, zero };

// Temporally correlated field r_t on a fixed point set (usually a full grid),
// advanced by r_{t+dt} = alpha r_t + beta eps_{t+dt}. Owns its random source;
// single-owner mutable.
struct RandomFieldState {
  SpectrumParams spectrum;
  AR1Config ar1;
  HarmonicBasis basis;
  Vector r;  // current field values over basis points
  Rng rng;

  ScalarField field(const SphericalGrid& grid) const;  // grid must match basis points
};

RandomFieldState ar1_init(const SpectrumParams& spectrum, const AR1Config& ar1,
                          const HarmonicBasis& basis, Rng rng, FieldInit mode);

RandomFieldState ar1_init(const SpectrumParams& spectrum, const AR1Config& ar1,
                          const SphericalGrid& grid, Rng rng, FieldInit mode);

void ar1_step(RandomFieldState& state);

}  // namespace hbef
