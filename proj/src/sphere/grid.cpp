#include "hbef/sphere/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace hbef {

SphericalGrid make_equiangular_grid(Index n_lat, Index n_lon) {
  if (n_lat < 2) throw std::invalid_argument("grid: n_lat must be >= 2");
  if (n_lon < 4) throw std::invalid_argument("grid: n_lon must be >= 4");

  SphericalGrid g;
  g.n_lat = n_lat;
  g.n_lon = n_lon;
  g.lat.resize(n_lat);
  g.lon.resize(n_lon);
  for (Index h = 0; h < n_lat; ++h)
    g.lat[h] = -0.5 * kPi + (static_cast<double>(h) + 0.5) * kPi / static_cast<double>(n_lat);
  for (Index w = 0; w < n_lon; ++w)
    g.lon[w] = 2.0 * kPi * static_cast<double>(w) / static_cast<double>(n_lon);

  Vector cos_lat = g.lat.array().cos();
  g.area_weights = cos_lat / cos_lat.mean();
  return g;
}

std::vector<SpherePoint> SphericalGrid::all_points() const {
  std::vector<SpherePoint> pts;
  pts.reserve(static_cast<std::size_t>(size()));
  for (Index h = 0; h < n_lat; ++h)
    for (Index w = 0; w < n_lon; ++w) pts.push_back({lat[h], lon[w]});
  return pts;
}

Vector SphericalGrid::point_weights() const {
  Vector w(size());
  for (Index h = 0; h < n_lat; ++h) w.segment(h * n_lon, n_lon).setConstant(area_weights[h]);
  return w;
}

bool same_grid(const SphericalGrid& a, const SphericalGrid& b) {
  return a.n_lat == b.n_lat && a.n_lon == b.n_lon && a.lat == b.lat && a.lon == b.lon;
}

ScalarField::ScalarField(const SphericalGrid& g, GridArray v) : grid(g), values(std::move(v)) {
  if (values.rows() != grid.n_lat || values.cols() != grid.n_lon)
    throw std::invalid_argument("ScalarField: values shape does not match grid");
}

Vector ScalarField::flattened() const {
  return Eigen::Map<const Vector>(values.data(), values.size());
}

ScalarField field_from_flat(const SphericalGrid& grid, const Vector& flat) {
  if (flat.size() != grid.size())
    throw std::invalid_argument("field_from_flat: length does not match grid size");
  ScalarField f(grid);
  Eigen::Map<Vector>(f.values.data(), flat.size()) = flat;
  return f;
}

double angular_distance(const SpherePoint& u, const SpherePoint& v) {
  // Haversine form; accurate for small separations, exact symmetry at antipodes.
  const double sdlat = std::sin(0.5 * (v.lat - u.lat));
  const double sdlon = std::sin(0.5 * (v.lon - u.lon));
  const double h = sdlat * sdlat + std::cos(u.lat) * std::cos(v.lat) * sdlon * sdlon;
  return 2.0 * std::asin(std::min(1.0, std::sqrt(h)));
}

}  // namespace hbef
