#pragma once

#include <vector>

#include "hbef/types.hpp"

namespace hbef {

struct SpherePoint {
  double lat = 0.0;  // radians, (-pi/2, pi/2)
  double lon = 0.0;  // radians, [0, 2*pi)
};

// Equiangular lat-lon grid with cell-center latitudes (no pole points).
// area_weights a_h = cos(lat_h) / mean_h cos(lat_h); mean over rings is 1.
struct SphericalGrid {
  Index n_lat = 0;
  Index n_lon = 0;
  Vector lat;           // strictly increasing, length n_lat
  Vector lon;           // uniform spacing, length n_lon
  Vector area_weights;  // length n_lat

  Index size() const { return n_lat * n_lon; }
  Index flat_index(Index row, Index col) const { return row * n_lon + col; }
  SpherePoint point(Index row, Index col) const { return {lat[row], lon[col]}; }
  SpherePoint point(Index flat) const { return point(flat / n_lon, flat % n_lon); }

  std::vector<SpherePoint> all_points() const;
  // Per-point latitude weight, flattened lat-major; mean over the grid is 1.
  Vector point_weights() const;
};

SphericalGrid make_equiangular_grid(Index n_lat, Index n_lon);

bool same_grid(const SphericalGrid& a, const SphericalGrid& b);

struct ScalarField {
  SphericalGrid grid;
  GridArray values;  // n_lat x n_lon

  ScalarField() = default;
  explicit ScalarField(const SphericalGrid& g)
      : grid(g), values(GridArray::Zero(g.n_lat, g.n_lon)) {}
  ScalarField(const SphericalGrid& g, GridArray v);

  Vector flattened() const;  // lat-major, lon-minor
};

ScalarField field_from_flat(const SphericalGrid& grid, const Vector& flat);

// Great-circle angle in [0, pi], stable near 0 and pi (haversine-based).
double angular_distance(const SpherePoint& u, const SpherePoint& v);

}  // namespace hbef
