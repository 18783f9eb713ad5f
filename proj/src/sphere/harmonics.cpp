#include "hbef/sphere/harmonics.hpp"

#include <cmath>
#include <stdexcept>

#include "hbef/sphere/legendre.hpp"

namespace hbef {

std::pair<double, double> spherical_harmonic(int l, int m, const SpherePoint& s) {
  const int am = std::abs(m);
  if (l < 0 || am > l) throw std::domain_error("spherical_harmonic: need 0 <= |m| <= l");
  const double log_ratio = std::lgamma(l - am + 1.0) - std::lgamma(l + am + 1.0);
  const double norm = std::sqrt((2.0 * l + 1.0) / kFourPi) * std::exp(0.5 * log_ratio);
  const double plm = assoc_legendre(l, am, std::sin(s.lat));
  const double phase = static_cast<double>(m) * s.lon;
  return {norm * plm * std::cos(phase), norm * plm * std::sin(phase)};
}

double real_spherical_harmonic(int l, int m, const SpherePoint& s) {
  const int am = std::abs(m);
  if (l < 0 || am > l) throw std::domain_error("real_spherical_harmonic: need 0 <= |m| <= l");
  const double nbar = normalized_assoc_legendre(l, am, std::sin(s.lat));
  if (m == 0) return nbar;
  const double sqrt2 = std::sqrt(2.0);
  if (m > 0) return sqrt2 * nbar * std::cos(m * s.lon);
  return sqrt2 * nbar * std::sin(am * s.lon);
}

Index harmonic_mode_index(int l, int m, int L) {
  if (l < 1 || l > L || std::abs(m) > l)
    throw std::domain_error("harmonic_mode_index: need 1 <= l <= L, |m| <= l");
  // Degrees 1..l-1 contribute l^2 - 1 modes.
  return static_cast<Index>(l) * l - 1 + (m + l);
}

HarmonicCoeffs sample_innovation(const SpectrumParams& params, Rng& rng) {
  const Vector c = power_spectrum(params);
  HarmonicCoeffs coeffs;
  coeffs.L = params.L;
  coeffs.a.resize(harmonic_mode_count(params.L));
  for (int l = 1; l <= params.L; ++l) {
    const double scale = std::sqrt(c[l]);
    for (int m = -l; m <= l; ++m) coeffs.at(l, m) = scale * rng.normal();
  }
  return coeffs;
}

Matrix sample_innovation_matrix(const SpectrumParams& params, Index n_draws, Rng& rng) {
  const Vector c = power_spectrum(params);
  Vector scale(harmonic_mode_count(params.L));
  for (int l = 1; l <= params.L; ++l)
    for (int m = -l; m <= l; ++m) scale[harmonic_mode_index(l, m, params.L)] = std::sqrt(c[l]);
  Matrix draws(scale.size(), n_draws);
  for (Index j = 0; j < n_draws; ++j) draws.col(j) = scale.cwiseProduct(rng.normal_vector(scale.size()));
  return draws;
}

HarmonicBasis::HarmonicBasis(std::span<const SpherePoint> points, int L) : L_(L) {
  if (L < 1) throw std::invalid_argument("HarmonicBasis: L must be >= 1");
  const Index n_pts = static_cast<Index>(points.size());
  basis_.resize(n_pts, harmonic_mode_count(L));

  Vector sin_lat(n_pts);
  for (Index p = 0; p < n_pts; ++p) sin_lat[p] = std::sin(points[p].lat);
  const Matrix nbar = normalized_assoc_legendre_table(L, sin_lat);

  const double sqrt2 = std::sqrt(2.0);
  for (Index p = 0; p < n_pts; ++p) {
    const double lon = points[static_cast<std::size_t>(p)].lon;
    for (int l = 1; l <= L; ++l) {
      basis_(p, harmonic_mode_index(l, 0, L)) = nbar(packed_lm_index(l, 0), p);
      for (int m = 1; m <= l; ++m) {
        const double v = sqrt2 * nbar(packed_lm_index(l, m), p);
        basis_(p, harmonic_mode_index(l, m, L)) = v * std::cos(m * lon);
        basis_(p, harmonic_mode_index(l, -m, L)) = v * std::sin(m * lon);
      }
    }
  }
}

HarmonicBasis HarmonicBasis::for_grid(const SphericalGrid& grid, int L) {
  const auto pts = grid.all_points();
  return HarmonicBasis(std::span<const SpherePoint>(pts.data(), pts.size()), L);
}

Vector HarmonicBasis::synthesize(const HarmonicCoeffs& coeffs) const {
  if (coeffs.L != L_)
    throw std::invalid_argument("HarmonicBasis::synthesize: truncation mismatch");
  return basis_ * coeffs.a;
}

ScalarField synthesize_field(const HarmonicCoeffs& coeffs, const SpectrumParams& params,
                             const SphericalGrid& grid) {
  if (coeffs.L != params.L)
    throw std::invalid_argument("synthesize_field: coeffs.L != params.L");
  const HarmonicBasis basis = HarmonicBasis::for_grid(grid, params.L);
  return field_from_flat(grid, basis.synthesize(coeffs));
}

}  // namespace hbef
