#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hbef/rng.hpp"
#include "hbef/sphere/grid.hpp"
#include "hbef/sphere/spectrum.hpp"
#include "hbef/types.hpp"

namespace hbef {

// Complex spherical harmonic Y_lm(s) as a (Re, Im) pair:
//   Y_lm = sqrt((2l+1)/(4 pi) * (l-|m|)!/(l+|m|)!) * P_l^{|m|}(sin lat) * e^{i m lon},
// with the factorial ratio evaluated in log space.
std::pair<double, double> spherical_harmonic(int l, int m, const SpherePoint& s);

// Real orthonormal spherical-harmonic basis function:
//   m = 0: Nbar_l^0(sin lat)
//   m > 0: sqrt(2) Nbar_l^m(sin lat) cos(m lon)
//   m < 0: sqrt(2) Nbar_l^{|m|}(sin lat) sin(|m| lon)
// These satisfy sum_m B_lm(u) B_lm(v) = ((2l+1)/4pi) P_l(cos angle(u,v)).
double real_spherical_harmonic(int l, int m, const SpherePoint& s);

// Mode ordering for degrees l = 1..L, m = -l..l (l = 0 carries no power).
inline Index harmonic_mode_count(int L) { return static_cast<Index>(L) * (L + 2); }
Index harmonic_mode_index(int l, int m, int L);

// Spectrum-scaled coefficients of the real basis: entry (l, m) holds
// sqrt(C_l) * xi_lm with xi_lm i.i.d. standard normal, so Var = C_l per mode.
struct HarmonicCoeffs {
  int L = 0;
  Vector a;  // length harmonic_mode_count(L)

  double& at(int l, int m) { return a[harmonic_mode_index(l, m, L)]; }
  double at(int l, int m) const { return a[harmonic_mode_index(l, m, L)]; }
};

HarmonicCoeffs sample_innovation(const SpectrumParams& params, Rng& rng);

// Columns are independent draws of the scaled coefficient vector.
Matrix sample_innovation_matrix(const SpectrumParams& params, Index n_draws, Rng& rng);

// Real basis functions tabulated over a fixed point set; synthesis is one
// matrix-vector product. Truncation L is fixed at construction.
class HarmonicBasis {
 public:
  HarmonicBasis(std::span<const SpherePoint> points, int L);
  static HarmonicBasis for_grid(const SphericalGrid& grid, int L);

  int L() const { return L_; }
  Index n_points() const { return basis_.rows(); }
  Index n_modes() const { return basis_.cols(); }
  const Matrix& matrix() const { return basis_; }

  Vector synthesize(const HarmonicCoeffs& coeffs) const;
  Vector synthesize(const Vector& coeffs) const { return basis_ * coeffs; }
  // Each column of coeff_cols is one draw; returns n_points x n_draws.
  Matrix synthesize_many(const Matrix& coeff_cols) const { return basis_ * coeff_cols; }

 private:
  int L_;
  Matrix basis_;  // n_points x n_modes
};

// epsilon(s) = sum_{l,m} a_lm B_lm(s) on the grid. The coefficients must carry
// the sqrt(C_l) scaling (as produced by sample_innovation); params is used for
// the truncation consistency check.
ScalarField synthesize_field(const HarmonicCoeffs& coeffs, const SpectrumParams& params,
                             const SphericalGrid& grid);

}  // namespace hbef
