#pragma once

#include "hbef/types.hpp"

namespace hbef {

// Angular power spectrum C_l = kappa^2 (l(l+1)/R^2 + tau^2)^(-gamma), C_0 = 0.
struct SpectrumParams {
  double kappa = 0.5;
  double tau = 5.31;
  double gamma = 2.0;
  int L = 16;
  double R = 1.0;

  void validate() const;
};

// C_0..C_L; C_0 = 0, strictly decreasing for l >= 1 when kappa > 0.
Vector power_spectrum(const SpectrumParams& params);

// Pointwise stationary variance (1/4pi) sum_{l>=1} (2l+1) C_l.
double spectrum_point_variance(const SpectrumParams& params);

// Cov(r(s_u), r(s_v)) = sum_{l>=1} ((2l+1)/4pi) C_l P_l(cos angle).
double isotropic_covariance(const SpectrumParams& params, double angle);

}  // namespace hbef
