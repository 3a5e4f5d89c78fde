#include <doctest.h>

#include "motifkit/census.hpp"
#include "motifkit/graph.hpp"
#include "motifkit/null_models.hpp"

using namespace motifkit;

TEST_CASE("edge list build collapses duplicates and orders labels") {
  const Graph g = Graph::from_edge_list({{"A", "B"}, {"B", "A"}, {"B", "C"}});
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.labels() == std::vector<std::string>{"A", "B", "C"});
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("self-loops and empty inputs are rejected") {
  CHECK_THROWS_AS(Graph::from_edge_list({{"A", "A"}}), InputError);
  CHECK_THROWS_AS(Graph::from_edge_list({}), InputError);
  CHECK_THROWS_WITH(Graph::from_edge_list({{"A", "B"}, {"C", "C"}}),
                    doctest::Contains("row 2"));
}

TEST_CASE("disconnected graphs are flagged") {
  const Graph g = Graph::from_edge_list({{"A", "B"}, {"C", "D"}});
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK_FALSE(g.connected());
  const auto metrics = global_metrics(g);
  CHECK_FALSE(metrics.connected);
  CHECK(metrics.largest_component_size == 2);
  CHECK(metrics.diameter == 1);  // on the largest component
}

TEST_CASE("metrics on complete graphs") {
  for (int n : {3, 5, 8}) {
    const auto m = global_metrics(Graph::complete(n));
    CHECK(m.density == doctest::Approx(1.0));
    CHECK(m.diameter == 1);
    CHECK(m.average_path_length == doctest::Approx(1.0));
    CHECK(m.clustering_overall == doctest::Approx(1.0));
    CHECK(m.clustering_average == doctest::Approx(1.0));
    CHECK(m.connected);
  }
}

TEST_CASE("metrics on a 3-path") {
  const auto m = global_metrics(Graph::path(3));
  CHECK(m.density == doctest::Approx(2.0 / 3.0));
  CHECK(m.diameter == 2);
  CHECK(m.average_path_length == doctest::Approx(4.0 / 3.0));
  CHECK(m.clustering_overall == doctest::Approx(0.0));
}

TEST_CASE("metrics on the 5-circle") {
  const auto m = global_metrics(Graph::cycle(5));
  CHECK(m.diameter == 2);
  CHECK(m.average_path_length == doctest::Approx(1.5));
  CHECK(m.clustering_overall == doctest::Approx(0.0));
}

TEST_CASE("path diameter is n-1") {
  for (int n : {2, 4, 7, 11}) CHECK(global_metrics(Graph::path(n)).diameter == n - 1);
}

TEST_CASE("degree stats on the 10-node star") {
  const auto s = degree_stats(Graph::star(10));
  CHECK(s.mean_k == doctest::Approx(1.8));        // 2 - 2/10
  CHECK(s.mean_k2 == doctest::Approx(9.0));       // n - 1
  CHECK(s.histogram.at(9) == 1);
  CHECK(s.histogram.at(1) == 9);
}

TEST_CASE("degree centralities of K_4 and C_4") {
  const auto k4 = degree_stats(Graph::complete(4));
  for (double c : k4.centrality) CHECK(c == doctest::Approx(1.0));
  const auto c4 = degree_stats(Graph::cycle(4));
  for (double c : c4.centrality) CHECK(c == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("churn examples") {
  const Graph a = Graph::from_edge_list({{"a", "b"}, {"b", "c"}});
  SUBCASE("identical graphs") {
    const auto churn = edge_churn(a, a);
    CHECK(*churn.added_pct == doctest::Approx(0.0));
    CHECK(*churn.lost_pct == doctest::Approx(0.0));
  }
  SUBCASE("disjoint edge sets") {
    const Graph b = Graph::from_edge_list({{"x", "y"}, {"y", "z"}});
    const auto churn = edge_churn(a, b);
    CHECK(*churn.added_pct == doctest::Approx(100.0));
    CHECK(*churn.lost_pct == doctest::Approx(100.0));
  }
  SUBCASE("half turnover") {
    const Graph b = Graph::from_edge_list({{"a", "b"}, {"c", "d"}});
    const auto churn = edge_churn(a, b);
    CHECK(*churn.added_pct == doctest::Approx(50.0));
    CHECK(*churn.lost_pct == doctest::Approx(50.0));
  }
}

TEST_CASE("moment identities tie degrees to star counts") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5 + static_cast<int>(rng.next_below(20));
    const Graph g = sample_gnp(n, 0.2 + 0.5 * rng.next_double(), rng);
    if (g.edge_count() == 0) continue;
    const auto s = degree_stats(g);
    const auto census = nested_census(g);
    // |M_3^(3)| = (n/2)(E[k^2] - E[k]) and the cubic analogue, in exact sums
    CHECK(2 * census.three_star == s.sum_k2 - s.sum_k);
    CHECK(6 * census.four_star == s.sum_k3 - 3 * s.sum_k2 + 2 * s.sum_k);
  }
}

TEST_CASE("clustering matches the census ratio") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 6 + static_cast<int>(rng.next_below(14));
    const Graph g = sample_gnp(n, 0.4, rng);
    const auto census = nested_census(g);
    const auto metrics = global_metrics(g);
    if (census.three_star == 0) {
      CHECK(metrics.clustering_overall == 0.0);
    } else {
      CHECK(metrics.clustering_overall ==
            doctest::Approx(3.0 * static_cast<double>(census.triangle) /
                            static_cast<double>(census.three_star)));
    }
  }
}
