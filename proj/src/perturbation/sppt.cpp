#include "hbef/perturbation/sppt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hbef/sphere/legendre.hpp"

namespace hbef {

void PerturbConfig::validate() const {
  for (const auto& [name, value] : mu) {
    if (value < 0.0)
      throw std::invalid_argument("perturbation.mu[" + name + "] must be >= 0");
  }
  if (clip && *clip <= 0.0) throw std::invalid_argument("perturbation.clip must be > 0");
}

double PerturbConfig::mu_for(const std::string& variable) const {
  const auto it = mu.find(variable);
  if (it == mu.end())
    throw std::invalid_argument("perturbation: no mu entry for variable '" + variable + "'");
  return it->second;
}

void StatePair::validate() const {
  if (variables.empty()) throw std::invalid_argument("StatePair: no variables");
  if (x_prev.size() != variables.size() || x_curr.size() != variables.size())
    throw std::invalid_argument("StatePair: field count does not match variable list");
  for (std::size_t v = 0; v < variables.size(); ++v) {
    if (!same_grid(x_prev[v].grid, x_curr[v].grid) || !same_grid(x_prev[v].grid, x_prev[0].grid))
      throw std::invalid_argument("StatePair: mismatched grids");
  }
}

Index StatePair::var_index(const std::string& variable) const {
  const auto it = std::find(variables.begin(), variables.end(), variable);
  if (it == variables.end())
    throw std::invalid_argument("StatePair: unknown variable '" + variable + "'");
  return static_cast<Index>(it - variables.begin());
}

Vector sppt_perturb_flat(const Vector& prev, const Vector& curr, const Vector& mu_elem,
                         const Vector& r_elem, std::optional<double> clip) {
  if (prev.size() != curr.size() || mu_elem.size() != curr.size() || r_elem.size() != curr.size())
    throw std::invalid_argument("sppt_perturb_flat: size mismatch");
  Vector factor = mu_elem.cwiseProduct(r_elem);
  if (clip) factor = factor.cwiseMax(-*clip).cwiseMin(*clip);
  return prev.array() + (1.0 + factor.array()) * (curr.array() - prev.array());
}

std::vector<ScalarField> apply_sppt(const StatePair& pair, const RandomFieldState& r,
                                    const PerturbConfig& cfg) {
  pair.validate();
  cfg.validate();
  const SphericalGrid& grid = pair.x_prev[0].grid;
  if (r.r.size() != grid.size())
    throw std::invalid_argument("apply_sppt: field state size does not match grid");

  std::vector<ScalarField> out;
  out.reserve(pair.variables.size());
  for (std::size_t v = 0; v < pair.variables.size(); ++v) {
    const double mu = cfg.mu_for(pair.variables[v]);
    const Vector prev = pair.x_prev[v].flattened();
    const Vector curr = pair.x_curr[v].flattened();
    const Vector mu_elem = Vector::Constant(prev.size(), mu);
    out.push_back(field_from_flat(grid, sppt_perturb_flat(prev, curr, mu_elem, r.r, cfg.clip)));
  }
  return out;
}

StatePair apply_gaussian_baseline(const StatePair& pair, double sigma, Rng& rng) {
  pair.validate();
  if (sigma < 0.0) throw std::invalid_argument("gaussian baseline: sigma must be >= 0");
  StatePair out = pair;
  for (std::size_t v = 0; v < pair.variables.size(); ++v) {
    const SphericalGrid& grid = pair.x_prev[v].grid;
    out.x_prev[v] = field_from_flat(
        grid, pair.x_prev[v].flattened() + sigma * rng.normal_vector(grid.size()));
    out.x_curr[v] = field_from_flat(
        grid, pair.x_curr[v].flattened() + sigma * rng.normal_vector(grid.size()));
  }
  return out;
}

double analytic_point_variance(const StatePair& pair, const PerturbConfig& cfg,
                               const SpectrumParams& spectrum, Index row, Index col,
                               const std::string& variable) {
  const Index v = pair.var_index(variable);
  const double mu = cfg.mu_for(variable);
  const double dx = pair.x_curr[v].values(row, col) - pair.x_prev[v].values(row, col);
  const double a = mu * dx;
  return a * a * spectrum_point_variance(spectrum);
}

double analytic_covariance(const StatePair& pair, const PerturbConfig& cfg,
                           const SpectrumParams& spectrum, Index row_u, Index col_u,
                           Index row_v, Index col_v, const std::string& variable) {
  const Index v = pair.var_index(variable);
  const double mu = cfg.mu_for(variable);
  const SphericalGrid& grid = pair.x_prev[v].grid;
  const double dx_u = pair.x_curr[v].values(row_u, col_u) - pair.x_prev[v].values(row_u, col_u);
  const double dx_v = pair.x_curr[v].values(row_v, col_v) - pair.x_prev[v].values(row_v, col_v);
  const double angle = angular_distance(grid.point(row_u, col_u), grid.point(row_v, col_v));
  return mu * mu * dx_u * dx_v * isotropic_covariance(spectrum, angle);
}

Matrix build_sigma_x(const StatePair& pair, const PerturbConfig& cfg,
                     const SpectrumParams& spectrum, const std::vector<GridIndex>& points,
                     const std::string& variable) {
  pair.validate();
  const Index v = pair.var_index(variable);
  const double mu = cfg.mu_for(variable);
  const SphericalGrid& grid = pair.x_prev[v].grid;
  const Index n = static_cast<Index>(points.size());

  Vector scaled_dx(n);
  for (Index i = 0; i < n; ++i) {
    const auto& p = points[static_cast<std::size_t>(i)];
    scaled_dx[i] = mu * (pair.x_curr[v].values(p.row, p.col) - pair.x_prev[v].values(p.row, p.col));
  }

  const Vector c = power_spectrum(spectrum);
  Matrix sigma(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j <= i; ++j) {
      const auto& pi = points[static_cast<std::size_t>(i)];
      const auto& pj = points[static_cast<std::size_t>(j)];
      const double angle = angular_distance(grid.point(pi.row, pi.col), grid.point(pj.row, pj.col));
      const Vector pleg = legendre_p_all(spectrum.L, std::cos(angle));
      double s = 0.0;
      for (int l = 1; l <= spectrum.L; ++l) s += (2.0 * l + 1.0) * c[l] * pleg[l];
      const double cov = scaled_dx[i] * scaled_dx[j] * s / kFourPi;
      sigma(i, j) = cov;
      sigma(j, i) = cov;
    }
  }
  return sigma;
}

Matrix build_sigma_x_full(const StatePair& pair, const PerturbConfig& cfg,
                          const SpectrumParams& spectrum, bool diagonal_only) {
  pair.validate();
  const SphericalGrid& grid = pair.x_prev[0].grid;
  const Index n_pts = grid.size();
  const Index n_vars = static_cast<Index>(pair.variables.size());
  const Index d = n_vars * n_pts;

  // mu_v * dX_v per flattened element.
  Vector scaled_dx(d);
  for (Index v = 0; v < n_vars; ++v) {
    const double mu = cfg.mu_for(pair.variables[static_cast<std::size_t>(v)]);
    scaled_dx.segment(v * n_pts, n_pts) =
        mu * (pair.x_curr[v].flattened() - pair.x_prev[v].flattened());
  }

  if (diagonal_only) {
    const double var = spectrum_point_variance(spectrum);
    return (scaled_dx.array().square() * var).matrix().asDiagonal();
  }

  // Field covariance over grid points, shared by all variables.
  const Vector c = power_spectrum(spectrum);
  Matrix field_cov(n_pts, n_pts);
  for (Index i = 0; i < n_pts; ++i) {
    for (Index j = 0; j <= i; ++j) {
      const double angle = angular_distance(grid.point(i), grid.point(j));
      const Vector pleg = legendre_p_all(spectrum.L, std::cos(angle));
      double s = 0.0;
      for (int l = 1; l <= spectrum.L; ++l) s += (2.0 * l + 1.0) * c[l] * pleg[l];
      field_cov(i, j) = s / kFourPi;
      field_cov(j, i) = field_cov(i, j);
    }
  }

  Matrix sigma(d, d);
  for (Index vu = 0; vu < n_vars; ++vu)
    for (Index vv = 0; vv < n_vars; ++vv)
      sigma.block(vu * n_pts, vv * n_pts, n_pts, n_pts) = field_cov;
  return scaled_dx.asDiagonal() * sigma * scaled_dx.asDiagonal();
}

}  // namespace hbef
