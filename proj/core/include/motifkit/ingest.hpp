#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "motifkit/geo.hpp"
#include "motifkit/graph.hpp"

namespace motifkit {

/// A time series of snapshots: one graph per period label, ordered
/// lexicographically (quarterly labels such as 1999Q1 sort naturally).
struct PeriodSeries {
  std::vector<std::pair<std::string, Graph>> periods;
  CoordinateTable coords;  // optional, filled by parse_airports
};

/// CSV with header `period,src,dst`. Reversed/exact duplicate rows collapse
/// per period; self-loops and malformed rows are rejected with line numbers.
PeriodSeries parse_edges(std::istream& in);
PeriodSeries parse_edges_file(const std::filesystem::path& path);

/// CSV with header `label,lat_deg,lon_deg`; validates ranges and rejects
/// duplicate labels with conflicting coordinates.
CoordinateTable parse_airports(std::istream& in);
CoordinateTable parse_airports_file(const std::filesystem::path& path);

}  // namespace motifkit
