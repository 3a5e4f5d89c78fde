#include <doctest.h>

#include <sstream>

#include "motifkit/ingest.hpp"

using namespace motifkit;

TEST_CASE("edge parsing groups periods and deduplicates") {
  std::istringstream in(
      "period,src,dst\n"
      "Q1,A,B\n"
      "Q1,B,A\n"
      "Q2,A,C\n");
  const auto series = parse_edges(in);
  REQUIRE(series.periods.size() == 2);
  CHECK(series.periods[0].first == "Q1");
  CHECK(series.periods[0].second.edge_count() == 1);
  CHECK(series.periods[1].first == "Q2");
  CHECK(series.periods[1].second.edge_count() == 1);
}

TEST_CASE("ingestion error paths carry line numbers") {
  SUBCASE("self loop") {
    std::istringstream in("period,src,dst\nQ1,A,A\n");
    CHECK_THROWS_WITH(parse_edges(in), doctest::Contains("line 2"));
  }
  SUBCASE("short row") {
    std::istringstream in("period,src,dst\nQ1,A,B\nQ1,A\n");
    CHECK_THROWS_WITH(parse_edges(in), doctest::Contains("line 3"));
  }
  SUBCASE("empty file") {
    std::istringstream in("");
    CHECK_THROWS_WITH(parse_edges(in), doctest::Contains("no data"));
  }
  SUBCASE("header only") {
    std::istringstream in("period,src,dst\n");
    CHECK_THROWS_WITH(parse_edges(in), doctest::Contains("no data"));
  }
  SUBCASE("wrong header") {
    std::istringstream in("from,to\nA,B\n");
    CHECK_THROWS_WITH(parse_edges(in), doctest::Contains("header"));
  }
}

TEST_CASE("periods come out in lexicographic order regardless of row order") {
  std::istringstream in(
      "period,src,dst\n"
      "2001Q2,A,B\n"
      "1999Q4,A,B\n"
      "2001Q1,A,C\n");
  const auto series = parse_edges(in);
  REQUIRE(series.periods.size() == 3);
  CHECK(series.periods[0].first == "1999Q4");
  CHECK(series.periods[1].first == "2001Q1");
  CHECK(series.periods[2].first == "2001Q2");
}

TEST_CASE("airport table parsing") {
  SUBCASE("valid rows") {
    std::istringstream in("label,lat_deg,lon_deg\nBWI,39.18,-76.67\nDEN,39.86,-104.67\n");
    const auto table = parse_airports(in);
    CHECK(table.size() == 2);
    CHECK(table.at("BWI").lat_deg == doctest::Approx(39.18));
  }
  SUBCASE("out-of-range latitude") {
    std::istringstream in("label,lat_deg,lon_deg\nX,91,0\n");
    CHECK_THROWS_WITH(parse_airports(in), doctest::Contains("line 2"));
  }
  SUBCASE("conflicting duplicate labels") {
    std::istringstream in("label,lat_deg,lon_deg\nX,10,20\nX,11,20\n");
    CHECK_THROWS_WITH(parse_airports(in), doctest::Contains("conflicting"));
  }
  SUBCASE("repeated identical rows are fine") {
    std::istringstream in("label,lat_deg,lon_deg\nX,10,20\nX,10,20\n");
    CHECK(parse_airports(in).size() == 1);
  }
  SUBCASE("malformed number") {
    std::istringstream in("label,lat_deg,lon_deg\nX,abc,20\n");
    CHECK_THROWS_WITH(parse_airports(in), doctest::Contains("malformed"));
  }
}
