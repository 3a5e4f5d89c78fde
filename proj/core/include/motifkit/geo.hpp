#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "motifkit/graph.hpp"

namespace motifkit {

/// Spherical Earth. Distances are statute miles; triangle areas follow the
/// aeronautical convention of a nautical-mile Earth radius.
constexpr double kEarthRadiusMiles = 3958.7613;
constexpr double kEarthRadiusNauticalMiles = 3440.065;

struct GeoPoint {
  double lat_deg = 0;  // [-90, 90]
  double lon_deg = 0;  // (-180, 180]
};

GeoPoint validated_point(double lat_deg, double lon_deg);  // throws on range errors

/// Haversine great-circle distance in statute miles.
double gc_distance(const GeoPoint& p, const GeoPoint& q);

struct TriangleGeometry {
  std::array<std::string, 3> labels{};  // empty for raw coordinate triples
  double area_sqmi = 0;                 // spherical excess area
  GeoPoint center;                      // per-coordinate arithmetic mean
};

/// Area by L'Huilier's spherical excess on great-circle side lengths; center
/// as the mean latitude/longitude. Near-degenerate vertex configurations
/// (3D centroid shorter than 1e-12) are rejected as "degenerate triangle".
TriangleGeometry triangle_geometry(const GeoPoint& p, const GeoPoint& q, const GeoPoint& r);

using CoordinateTable = std::map<std::string, GeoPoint>;

/// One geometry record per triangle instance in the graph; every node that
/// sits in a triangle must have coordinates (missing labels are listed).
std::vector<TriangleGeometry> spatial_census(const Graph& g, const CoordinateTable& coords);

struct DensityCurve {
  std::vector<double> x;
  std::vector<double> f;
  double bandwidth = 0;
};

/// Gaussian kernel density on a 512-point grid spanning the data range plus
/// three bandwidths each side; Silverman's rule when no bandwidth is given.
/// No boundary correction.
DensityCurve kde(std::span<const double> values, std::optional<double> bandwidth = {});

}  // namespace motifkit
