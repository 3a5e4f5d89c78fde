#include <doctest.h>

#include <cmath>

#include "motifkit/census.hpp"
#include "motifkit/scaling.hpp"

using namespace motifkit;

TEST_CASE("an exact power law is recovered to machine precision") {
  std::vector<std::pair<double, double>> pts;
  for (int m = 2; m <= 40; ++m) pts.emplace_back(m, 2.0 * m * m * m);
  const auto fit = loglog_fit(pts);
  CHECK(std::abs(fit.slope - 3.0) < 1e-9);
  CHECK(std::abs(fit.intercept - std::log(2.0)) < 1e-9);
  CHECK(fit.r_squared == doctest::Approx(1.0));
}

TEST_CASE("constant counts fit slope zero with R2 one by convention") {
  std::vector<std::pair<double, double>> pts;
  for (int m = 2; m <= 10; ++m) pts.emplace_back(m, 17.0);
  const auto fit = loglog_fit(pts);
  CHECK(fit.slope == doctest::Approx(0.0));
  CHECK(fit.r_squared == doctest::Approx(1.0));
}

TEST_CASE("zero counts are excluded and reported") {
  std::vector<std::pair<double, double>> pts{{2, 4}, {3, 9}, {4, 0}, {5, 25}};
  const auto fit = loglog_fit(pts);
  CHECK(fit.excluded_zero == 1);
  CHECK(fit.n_points == 3);
  CHECK(std::abs(fit.slope - 2.0) < 1e-9);
}

TEST_CASE("degenerate abscissae are rejected") {
  const std::vector<std::pair<double, double>> pts{{4, 7}, {4, 9}};
  CHECK_THROWS_AS(loglog_fit(pts), InputError);
}

TEST_CASE("implied slopes in Erdos-Renyi sequences") {
  CHECK(er_implied_slope(3) == doctest::Approx(1.5));
  CHECK(er_implied_slope(4) == doctest::Approx(2.0));
  CHECK(er_implied_slope(6) == doctest::Approx(3.0));
}

TEST_CASE("regime model edge counts at the boundary") {
  const RegimeModelSpec spec{5, 12};
  // l = n* = 5 is still the star
  CHECK(regime_analytic_counts(spec, 5).edges == 4);
  // one and two steps into the dense phase
  CHECK(regime_analytic_counts(spec, 6).edges == 2 * 5 - 1);
  CHECK(regime_analytic_counts(spec, 7).edges == 3 * 5);
  // l = 5: C(4,2) three-stars
  CHECK(regime_analytic_counts(spec, 5).three_stars == 6);
}

TEST_CASE("built regime graphs match the closed forms") {
  for (int n_star : {3, 5, 9, 14}) {
    const RegimeModelSpec spec{n_star, 30};
    const auto graphs = regime_model_build(spec);
    REQUIRE(graphs.size() == 29u);
    for (int l = 2; l <= 30; ++l) {
      const Graph& g = graphs[l - 2];
      const auto pt = regime_analytic_counts(spec, l);
      CHECK(g.node_count() == l);
      CHECK(g.edge_count() == pt.edges);
      CHECK(nested_census(g).three_star == pt.three_stars);
    }
  }
}

TEST_CASE("the l=4..30, n*=20 trajectory averages the two regimes") {
  const RegimeModelSpec spec{20, 30};
  std::vector<std::pair<double, double>> pts;
  for (int l = 4; l <= 30; ++l) {
    const auto pt = regime_analytic_counts(spec, l);
    pts.emplace_back(static_cast<double>(pt.edges), static_cast<double>(pt.three_stars));
  }
  const auto fit = loglog_fit(pts);
  CHECK(fit.slope == doctest::Approx(1.56).epsilon(0.013));
  CHECK(fit.r_squared == doctest::Approx(0.983).epsilon(0.0051));
}

TEST_CASE("scaling feasibility of a fitted triangle law") {
  SUBCASE("fixed clique number") {
    const auto res = scaling_feasibility(-4.18, 1.86, FeasibilitySubgraph::triangle,
                                         CliquePolicy::fixed_w, 11);
    REQUIRE(res.violated);
    const double c11 = std::log(9.0) - 0.5 * std::log(4.5 * 10.0 * 11.0);
    CHECK(res.c_w == doctest::Approx(c11));
    CHECK(res.crossover_m == doctest::Approx(std::exp((c11 + 4.18) / 0.36)));
  }
  SUBCASE("critical slope is never violated") {
    CHECK_FALSE(scaling_feasibility(-4.18, 1.5, FeasibilitySubgraph::triangle,
                                    CliquePolicy::fixed_w, 11)
                    .violated);
  }
  SUBCASE("growing clique limits") {
    const auto tri = scaling_feasibility(-4.18, 1.86, FeasibilitySubgraph::triangle,
                                         CliquePolicy::growing_w);
    CHECK(tri.c_w == doctest::Approx(-0.5 * std::log(4.5)));
    CHECK(tri.c_w == doctest::Approx(-0.75).epsilon(0.004));
    const auto k4 = scaling_feasibility(-11.66, 3.18, FeasibilitySubgraph::four_complete,
                                        CliquePolicy::growing_w);
    CHECK(k4.c_w == doctest::Approx(-std::log(6.0)));
  }
  SUBCASE("4-complete ceiling constant matches both published forms") {
    const auto res = scaling_feasibility(-11.66, 3.18, FeasibilitySubgraph::four_complete,
                                         CliquePolicy::fixed_w, 11);
    const double via_binomials = std::log(330.0) - 2 * std::log(55.0);
    const double via_factors = std::log(8.0) + std::log(9.0) - std::log(6.0 * 10.0 * 11.0);
    CHECK(res.c_w == doctest::Approx(via_binomials));
    CHECK(via_binomials == doctest::Approx(via_factors));
  }
}

TEST_CASE("n-circle family: 3-star slope one, no triangles") {
  std::vector<std::pair<double, double>> pts;
  for (int n = 5; n <= 40; ++n) {
    const Graph g = Graph::cycle(n);
    const auto c = nested_census(g);
    CHECK(c.triangle == 0);
    pts.emplace_back(static_cast<double>(g.edge_count()), static_cast<double>(c.three_star));
  }
  const auto fit = loglog_fit(pts);
  CHECK(fit.slope == doctest::Approx(1.0));
  CHECK(fit.r_squared == doctest::Approx(1.0));
}
