#include <doctest.h>

#include <cmath>

#include "motifkit/geo.hpp"
#include "support/oracles.hpp"

using namespace motifkit;

namespace {

const GeoPoint kBWI{39.18, -76.67};
const GeoPoint kDEN{39.86, -104.67};
const GeoPoint kLAS{36.08, -115.17};

}  // namespace

TEST_CASE("distance basics") {
  CHECK(gc_distance(kBWI, kBWI) == doctest::Approx(0.0));
  const GeoPoint north{45.0, 10.0}, south{-45.0, -170.0};  // antipodal pair
  CHECK(gc_distance(north, south) ==
        doctest::Approx(3.14159265358979 * kEarthRadiusMiles).epsilon(1e-9));
}

TEST_CASE("haversine agrees with the arccosine oracle") {
  const double expected = oracle::gc_distance_acos(kBWI.lat_deg, kBWI.lon_deg, kDEN.lat_deg,
                                                   kDEN.lon_deg, kEarthRadiusMiles);
  CHECK(gc_distance(kBWI, kDEN) == doctest::Approx(expected).epsilon(1e-10));
  CHECK(gc_distance(kBWI, kDEN) > 1400);
  CHECK(gc_distance(kBWI, kDEN) < 1600);
}

TEST_CASE("the worked route triangle") {
  const auto tg = triangle_geometry(kBWI, kDEN, kLAS);
  CHECK(tg.area_sqmi == doctest::Approx(87754.0).epsilon(0.02));
  CHECK(std::abs(tg.center.lat_deg - 38.37) <= 0.05);
  CHECK(std::abs(tg.center.lon_deg - (-98.84)) <= 0.05);
}

TEST_CASE("degenerate triangles") {
  SUBCASE("three identical points") {
    const auto tg = triangle_geometry(kBWI, kBWI, kBWI);
    CHECK(tg.area_sqmi == doctest::Approx(0.0));
    CHECK(tg.center.lat_deg == doctest::Approx(kBWI.lat_deg));
    CHECK(tg.center.lon_deg == doctest::Approx(kBWI.lon_deg));
  }
  SUBCASE("balanced antipodal-style configuration errors out") {
    // three points whose position vectors cancel
    const GeoPoint a{0.0, 0.0}, b{0.0, 120.0}, c{0.0, -120.0};
    CHECK_THROWS_WITH(triangle_geometry(a, b, c), doctest::Contains("degenerate"));
  }
}

TEST_CASE("octant triangle area") {
  const auto tg = triangle_geometry({0, 0}, {0, 90}, {90, 0});
  const double expected = 3.14159265358979323846 * kEarthRadiusNauticalMiles *
                          kEarthRadiusNauticalMiles / 2.0;
  CHECK(std::abs(tg.area_sqmi - expected) <= 1e-6 * expected);
}

TEST_CASE("area is invariant under vertex permutation and rotation") {
  const auto base = triangle_geometry(kBWI, kDEN, kLAS);
  const auto swapped = triangle_geometry(kLAS, kBWI, kDEN);
  CHECK(swapped.area_sqmi == doctest::Approx(base.area_sqmi).epsilon(1e-12));
  CHECK(swapped.center.lat_deg == doctest::Approx(base.center.lat_deg).epsilon(1e-12));

  // rotate all three points around the polar axis
  auto rotate = [](const GeoPoint& p, double dlon) {
    double lon = p.lon_deg + dlon;
    if (lon > 180) lon -= 360;
    return GeoPoint{p.lat_deg, lon};
  };
  const auto rotated = triangle_geometry(rotate(kBWI, 40), rotate(kDEN, 40), rotate(kLAS, 40));
  CHECK(std::abs(rotated.area_sqmi - base.area_sqmi) <= 1e-8 * base.area_sqmi);
}

TEST_CASE("spatial census composes geometry and triangle instances") {
  CoordinateTable coords{{"BWI", kBWI}, {"DEN", kDEN}, {"LAS", kLAS}};
  SUBCASE("single triangle") {
    const Graph g = Graph::from_edge_list({{"BWI", "DEN"}, {"DEN", "LAS"}, {"BWI", "LAS"}});
    const auto records = spatial_census(g, coords);
    REQUIRE(records.size() == 1);
    const auto direct = triangle_geometry(kBWI, kDEN, kLAS);
    CHECK(records[0].area_sqmi == doctest::Approx(direct.area_sqmi));
    CHECK(records[0].labels == std::array<std::string, 3>{"BWI", "DEN", "LAS"});
  }
  SUBCASE("triangle-free graphs yield nothing") {
    const Graph g = Graph::from_edge_list({{"BWI", "DEN"}, {"DEN", "LAS"}});
    CHECK(spatial_census(g, coords).empty());
  }
  SUBCASE("K_4 yields four records") {
    CoordinateTable four = coords;
    four["MDW"] = validated_point(41.79, -87.75);
    const Graph g = Graph::from_edge_list({{"BWI", "DEN"}, {"BWI", "LAS"}, {"BWI", "MDW"},
                                           {"DEN", "LAS"}, {"DEN", "MDW"}, {"LAS", "MDW"}});
    CHECK(spatial_census(g, four).size() == 4);
  }
  SUBCASE("missing coordinates are listed") {
    const Graph g = Graph::from_edge_list({{"BWI", "DEN"}, {"DEN", "XXX"}, {"BWI", "XXX"}});
    CHECK_THROWS_WITH(spatial_census(g, coords), doctest::Contains("XXX"));
  }
}

TEST_CASE("point validation") {
  CHECK_THROWS_AS(validated_point(91, 0), InputError);
  CHECK_THROWS_AS(validated_point(0, -181), InputError);
  CHECK(validated_point(90, 180).lat_deg == 90);
}

TEST_CASE("kernel density estimates") {
  SUBCASE("symmetric data gives a symmetric curve") {
    const std::vector<double> values{-3, -2, -1, 1, 2, 3};
    const auto curve = kde(values);
    const std::size_t n = curve.x.size();
    REQUIRE(n == 512);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::abs(curve.f[i] - curve.f[n - 1 - i]) < 1e-10);
  }
  SUBCASE("repeated values need an explicit bandwidth") {
    const std::vector<double> values{5, 5, 5, 5};
    CHECK_THROWS_WITH(kde(values), doctest::Contains("bandwidth"));
    const auto curve = kde(values, 1.0);
    // a single Gaussian bump centered at 5
    std::size_t peak = 0;
    for (std::size_t i = 0; i < curve.x.size(); ++i)
      if (curve.f[i] > curve.f[peak]) peak = i;
    CHECK(std::abs(curve.x[peak] - 5.0) < 0.02);
  }
  SUBCASE("the density integrates to one") {
    std::vector<double> values;
    for (int i = 0; i < 40; ++i) values.push_back(std::sin(i * 0.7) * 3 + i % 5);
    const auto curve = kde(values);
    CHECK(std::abs(oracle::trapezoid(curve.x, curve.f) - 1.0) < 1e-2);
  }
  SUBCASE("fewer than two values is an error") {
    CHECK_THROWS_AS(kde(std::vector<double>{1.0}), InputError);
  }
}
