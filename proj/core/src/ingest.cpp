#include "motifkit/ingest.hpp"

#include <fstream>
#include <map>

namespace motifkit {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(trim(line.substr(start)));
      break;
    }
    out.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

double parse_number(const std::string& token, std::size_t line_no, const char* what) {
  try {
    std::size_t used = 0;
    double v = std::stod(token, &used);
    if (used != token.size()) fail_line(line_no, std::string("malformed ") + what + " '" + token + "'");
    return v;
  } catch (const std::logic_error&) {
    fail_line(line_no, std::string("malformed ") + what + " '" + token + "'");
  }
}

}  // namespace

PeriodSeries parse_edges(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw InputError("no data");
  ++line_no;
  if (split_csv(line) != std::vector<std::string>{"period", "src", "dst"})
    throw InputError("expected header 'period,src,dst', got '" + trim(line) + "'");

  std::map<std::string, std::vector<std::pair<std::string, std::string>>> by_period;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 3) fail_line(line_no, "expected 3 fields, got " + std::to_string(fields.size()));
    const auto& [period, src, dst] = std::tie(fields[0], fields[1], fields[2]);
    if (period.empty() || src.empty() || dst.empty()) fail_line(line_no, "empty field");
    if (src == dst) fail_line(line_no, "self-loop " + src + "-" + dst);
    by_period[period].emplace_back(src, dst);
  }
  if (by_period.empty()) throw InputError("no data");

  PeriodSeries series;
  for (auto& [period, edges] : by_period)  // std::map keeps labels ordered
    series.periods.emplace_back(period, Graph::from_edge_list(edges));
  return series;
}

PeriodSeries parse_edges_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_edges(in);
}

CoordinateTable parse_airports(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw InputError("no data");
  ++line_no;
  if (split_csv(line) != std::vector<std::string>{"label", "lat_deg", "lon_deg"})
    throw InputError("expected header 'label,lat_deg,lon_deg', got '" + trim(line) + "'");

  CoordinateTable table;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 3) fail_line(line_no, "expected 3 fields, got " + std::to_string(fields.size()));
    if (fields[0].empty()) fail_line(line_no, "empty label");
    GeoPoint pt;
    try {
      pt = validated_point(parse_number(fields[1], line_no, "latitude"),
                           parse_number(fields[2], line_no, "longitude"));
    } catch (const InputError& e) {
      fail_line(line_no, e.what());
    }
    auto [it, inserted] = table.emplace(fields[0], pt);
    if (!inserted && (it->second.lat_deg != pt.lat_deg || it->second.lon_deg != pt.lon_deg))
      fail_line(line_no, "conflicting coordinates for label " + fields[0]);
  }
  if (table.empty()) throw InputError("no data");
  return table;
}

CoordinateTable parse_airports_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_airports(in);
}

}  // namespace motifkit
