#include "motifkit/geo.hpp"

#include <algorithm>
#include <cmath>

#include "motifkit/census.hpp"

namespace motifkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

double rad(double deg) { return deg * kPi / 180.0; }

struct Vec3 {
  double x, y, z;
};

Vec3 unit_vector(const GeoPoint& p) {
  const double la = rad(p.lat_deg), lo = rad(p.lon_deg);
  return {std::cos(la) * std::cos(lo), std::cos(la) * std::sin(lo), std::sin(la)};
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Central angle between two surface points; atan2 form is stable for both
/// tiny and near-antipodal separations.
double central_angle(const GeoPoint& p, const GeoPoint& q) {
  const Vec3 a = unit_vector(p), b = unit_vector(q);
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

}  // namespace

GeoPoint validated_point(double lat_deg, double lon_deg) {
  if (!(lat_deg >= -90.0 && lat_deg <= 90.0))
    throw InputError("latitude out of range: " + std::to_string(lat_deg));
  if (!(lon_deg > -180.0 && lon_deg <= 180.0))
    throw InputError("longitude out of range: " + std::to_string(lon_deg));
  return {lat_deg, lon_deg};
}

double gc_distance(const GeoPoint& p, const GeoPoint& q) {
  // Haversine with the final atan2 form.
  const double phi1 = rad(p.lat_deg), phi2 = rad(q.lat_deg);
  const double dphi = phi2 - phi1, dlam = rad(q.lon_deg - p.lon_deg);
  const double h = std::sin(dphi / 2) * std::sin(dphi / 2) +
                   std::cos(phi1) * std::cos(phi2) * std::sin(dlam / 2) * std::sin(dlam / 2);
  return 2.0 * kEarthRadiusMiles * std::atan2(std::sqrt(h), std::sqrt(std::max(0.0, 1.0 - h)));
}

TriangleGeometry triangle_geometry(const GeoPoint& p, const GeoPoint& q, const GeoPoint& r) {
  const Vec3 up = unit_vector(p), uq = unit_vector(q), ur = unit_vector(r);
  const Vec3 sum{up.x + uq.x + ur.x, up.y + uq.y + ur.y, up.z + uq.z + ur.z};
  if (norm(sum) < 3e-12) throw InputError("degenerate triangle");

  const double a = central_angle(q, r);
  const double b = central_angle(p, r);
  const double c = central_angle(p, q);
  const double s = (a + b + c) / 2;
  const double t = std::tan(s / 2) * std::tan((s - a) / 2) * std::tan((s - b) / 2) *
                   std::tan((s - c) / 2);
  const double excess = 4.0 * std::atan(std::sqrt(std::max(0.0, t)));

  TriangleGeometry out;
  out.area_sqmi = excess * kEarthRadiusNauticalMiles * kEarthRadiusNauticalMiles;
  out.center = {(p.lat_deg + q.lat_deg + r.lat_deg) / 3.0,
                (p.lon_deg + q.lon_deg + r.lon_deg) / 3.0};
  return out;
}

std::vector<TriangleGeometry> spatial_census(const Graph& g, const CoordinateTable& coords) {
  // Coordinates must exist for every node appearing in some triangle.
  auto memberships = membership_counts(g, classes::triangle(), CountMode::nested);
  std::string missing;
  for (int i = 0; i < g.node_count(); ++i) {
    if (memberships[i] > 0 && !coords.count(g.label(i)))
      missing += (missing.empty() ? "" : ", ") + g.label(i);
  }
  if (!missing.empty()) throw InputError("missing coordinates for: " + missing);

  std::vector<TriangleGeometry> out;
  visit_instances(g, classes::triangle(), CountMode::nested,
                  [&](std::span<const int> nodes, std::uint32_t) {
                    const std::string& l0 = g.label(nodes[0]);
                    const std::string& l1 = g.label(nodes[1]);
                    const std::string& l2 = g.label(nodes[2]);
                    TriangleGeometry tg =
                        triangle_geometry(coords.at(l0), coords.at(l1), coords.at(l2));
                    tg.labels = {l0, l1, l2};
                    out.push_back(std::move(tg));
                  });
  std::sort(out.begin(), out.end(),
            [](const TriangleGeometry& a, const TriangleGeometry& b) { return a.labels < b.labels; });
  return out;
}

DensityCurve kde(std::span<const double> values, std::optional<double> bandwidth) {
  const std::size_t n = values.size();
  if (n < 2) throw InputError("kernel density needs at least 2 values");

  double h;
  if (bandwidth) {
    h = *bandwidth;
    if (h <= 0) throw InputError("bandwidth must be positive");
  } else {
    double mean = 0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (sd == 0)
      throw InputError("zero variance; pass an explicit bandwidth");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    auto quantile = [&](double q) {
      const double pos = q * static_cast<double>(n - 1);
      const std::size_t lo = static_cast<std::size_t>(pos);
      const std::size_t hi = std::min(lo + 1, n - 1);
      const double frac = pos - static_cast<double>(lo);
      return sorted[lo] * (1 - frac) + sorted[hi] * frac;
    };
    const double iqr = quantile(0.75) - quantile(0.25);
    const double spread = iqr > 0 ? std::min(sd, iqr / 1.34) : sd;
    h = 0.9 * spread * std::pow(static_cast<double>(n), -0.2);
  }

  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  const double lo = *mn - 3 * h, hi = *mx + 3 * h;
  constexpr int kGrid = 512;
  DensityCurve curve;
  curve.bandwidth = h;
  curve.x.resize(kGrid);
  curve.f.resize(kGrid);
  const double step = (hi - lo) / (kGrid - 1);
  const double scale = 1.0 / (static_cast<double>(n) * h * std::sqrt(2 * kPi));
  for (int i = 0; i < kGrid; ++i) {
    const double x = lo + step * i;
    double f = 0;
    for (double v : values) {
      const double u = (x - v) / h;
      f += std::exp(-0.5 * u * u);
    }
    curve.x[i] = x;
    curve.f[i] = f * scale;
  }
  return curve;
}

}  // namespace motifkit
