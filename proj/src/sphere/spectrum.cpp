#include "hbef/sphere/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "hbef/sphere/legendre.hpp"

namespace hbef {

void SpectrumParams::validate() const {
  if (kappa < 0.0) throw std::invalid_argument("spectrum.kappa must be >= 0");
  if (tau <= 0.0) throw std::invalid_argument("spectrum.tau must be > 0");
  if (gamma <= 0.0) throw std::invalid_argument("spectrum.gamma must be > 0");
  if (L < 1) throw std::invalid_argument("spectrum.L must be >= 1");
  if (R <= 0.0) throw std::invalid_argument("spectrum.R must be > 0");
}

Vector power_spectrum(const SpectrumParams& params) {
  params.validate();
  Vector c = Vector::Zero(params.L + 1);
  const double k2 = params.kappa * params.kappa;
  const double t2 = params.tau * params.tau;
  for (int l = 1; l <= params.L; ++l) {
    const double ll1 = static_cast<double>(l) * (l + 1.0) / (params.R * params.R);
    c[l] = k2 * std::pow(ll1 + t2, -params.gamma);
  }
  return c;
}

double spectrum_point_variance(const SpectrumParams& params) {
  const Vector c = power_spectrum(params);
  double s = 0.0;
  for (int l = 1; l <= params.L; ++l) s += (2.0 * l + 1.0) * c[l];
  return s / kFourPi;
}

double isotropic_covariance(const SpectrumParams& params, double angle) {
  const Vector c = power_spectrum(params);
  const Vector p = legendre_p_all(params.L, std::cos(angle));
  double s = 0.0;
  for (int l = 1; l <= params.L; ++l) s += (2.0 * l + 1.0) * c[l] * p[l];
  return s / kFourPi;
}

}  // namespace hbef
