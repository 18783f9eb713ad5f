#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hbef/perturbation/ar1.hpp"
#include "hbef/rng.hpp"
#include "hbef/sphere/grid.hpp"
#include "hbef/sphere/spectrum.hpp"
#include "hbef/types.hpp"

namespace hbef {

// Multiplicative perturbation amplitudes, one per variable. The optional clip
// bounds |mu * r| before use; it must be disabled when validating the exact
// moment identities, which clipping breaks.
struct PerturbConfig {
  std::map<std::string, double> mu;
  std::optional<double> clip;

  void validate() const;
  double mu_for(const std::string& variable) const;  // throws naming the variable
};

// Two consecutive states X_{t-1}, X_t per variable on a shared grid.
struct StatePair {
  std::vector<std::string> variables;
  std::vector<ScalarField> x_prev;
  std::vector<ScalarField> x_curr;

  void validate() const;
  Index var_index(const std::string& variable) const;
  GridArray increment(Index v) const { return x_curr[v].values - x_prev[v].values; }
};

// X^p_t = X_{t-1} + [1 + mu_v r_t(s)] (X_t - X_{t-1}) per variable and point.
std::vector<ScalarField> apply_sppt(const StatePair& pair, const RandomFieldState& r,
                                    const PerturbConfig& cfg);

// Elementwise core used by apply_sppt and the ensemble rollout: curr and prev
// are flattened states, mu_elem the per-element amplitude, r_elem the field
// values tiled to the state layout.
Vector sppt_perturb_flat(const Vector& prev, const Vector& curr, const Vector& mu_elem,
                         const Vector& r_elem, std::optional<double> clip);

// Additive Gaussian baseline: X^p_{t-1:t} = X_{t-1:t} + sigma * eps,
// eps i.i.d. standard normal per grid point (fresh draws for each slice).
StatePair apply_gaussian_baseline(const StatePair& pair, double sigma, Rng& rng);

// Theorem-level validators: the exact mean/variance/covariance implied by the
// multiplicative scheme with an isotropic field of spectrum C_l.
double analytic_point_variance(const StatePair& pair, const PerturbConfig& cfg,
                               const SpectrumParams& spectrum, Index row, Index col,
                               const std::string& variable);

double analytic_covariance(const StatePair& pair, const PerturbConfig& cfg,
                           const SpectrumParams& spectrum, Index row_u, Index col_u,
                           Index row_v, Index col_v, const std::string& variable);

struct GridIndex {
  Index row = 0;
  Index col = 0;
};

// Dense symmetric PSD covariance of X^p_t over the listed grid points,
// Sigma_x = mu^2 D_dX Sigma D_dX with Sigma from the addition theorem.
Matrix build_sigma_x(const StatePair& pair, const PerturbConfig& cfg,
                     const SpectrumParams& spectrum, const std::vector<GridIndex>& points,
                     const std::string& variable);

// Full-state covariance over every (variable, grid point) in flattened
// variable-major order. Off-diagonal variable blocks are nonzero because all
// variables share one field r_t scaled by their own mu. diagonal_only keeps
// just the per-element variances (for grids too large for the dense matrix).
Matrix build_sigma_x_full(const StatePair& pair, const PerturbConfig& cfg,
                          const SpectrumParams& spectrum, bool diagonal_only = false);

}  // namespace hbef
