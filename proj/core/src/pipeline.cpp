#include "motifkit/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "motifkit/parallel.hpp"
#include "motifkit/rng.hpp"

namespace motifkit {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::uint64_t period_seed(const RunConfig& cfg, std::size_t period_index, std::size_t salt) {
  return stream_seed(cfg.master_seed, (period_index << 8) | salt);
}

PeriodReport analyze_period(const PeriodSeries& series, const RunConfig& cfg, std::size_t idx) {
  const auto& [label, g] = series.periods[idx];
  PeriodReport rep;
  rep.period = label;
  rep.n = g.node_count();
  rep.m = g.edge_count();
  try {
    if (cfg.run_metrics) rep.metrics = global_metrics(g);
    if (cfg.run_census) rep.census = census_report(g, cfg.extended_classes);

    for (std::size_t k = 0; k < cfg.nulls.size(); ++k) {
      EnsembleSpec spec;
      spec.kind = cfg.nulls[k];
      spec.replications = cfg.replications;
      spec.bootstrap = cfg.bootstrap;
      spec.rewire_steps = cfg.rewire_steps;
      spec.anneal = cfg.anneal;
      spec.master_seed = period_seed(cfg, idx, k + 1);
      rep.zscores.push_back(motif_scan(g, spec));
    }

    if (cfg.run_centrality) {
      rep.centralities.push_back(degree_centrality(g));
      rep.centralities.push_back(subgraph_centrality_estrada(g));
      rep.centralities.push_back(membership_centrality(g, classes::triangle(), CountMode::nested));
      rep.centralities.push_back(
          membership_centrality(g, classes::four_circle(), CountMode::non_nested));
      rep.centralities.push_back(
          membership_centrality(g, classes::four_complete(), CountMode::nested));
      rep.rankings = rank_and_correlate(g, rep.centralities, cfg.top_k);
    }

    if (cfg.run_spatial) {
      rep.triangles = spatial_census(g, series.coords);
      if (rep.triangles.size() >= 2) {
        std::vector<double> areas;
        areas.reserve(rep.triangles.size());
        for (const auto& t : rep.triangles) areas.push_back(t.area_sqmi);
        rep.area_density = kde(areas, cfg.kde_bandwidth);
      }
    }

    if (idx > 0) rep.churn = edge_churn(series.periods[idx - 1].second, g);
  } catch (const InputError& e) {
    rep.ok = false;
    rep.error = e.what();
  }
  return rep;
}

}  // namespace

ReportBundle run_pipeline(const PeriodSeries& series, const RunConfig& config) {
  if (series.periods.empty()) throw InputError("no periods to analyze");
  if (config.run_spatial && series.coords.empty())
    throw InputError("spatial analysis needs a coordinate table");

  ReportBundle bundle;
  bundle.config = config;
  bundle.periods.resize(series.periods.size());
  parallel_for(static_cast<int>(series.periods.size()), [&](int i) {
    bundle.periods[i] = analyze_period(series, config, static_cast<std::size_t>(i));
  });

  if (config.run_scaling) {
    // Per-class (m, count) points across periods, then the log-log fits.
    std::vector<std::string> keys;
    for (const auto& rep : bundle.periods) {
      if (!rep.ok) continue;
      for (const auto& [key, value] : census_flat(rep.census))
        if (key[0] == 'M' && key[1] == '_' &&  // nested classes only
            std::find(keys.begin(), keys.end(), key) == keys.end())
          keys.push_back(key);
    }
    for (const auto& key : keys) {
      std::vector<std::pair<double, double>> points;
      for (const auto& rep : bundle.periods) {
        if (!rep.ok) continue;
        for (const auto& [k, value] : census_flat(rep.census))
          if (k == key) points.emplace_back(static_cast<double>(rep.m), static_cast<double>(value));
      }
      ScalingEntry entry;
      entry.class_key = key;
      try {
        entry.fit = loglog_fit(points);
        entry.ok = true;
      } catch (const InputError& e) {
        entry.error = e.what();
      }
      bundle.scaling.push_back(std::move(entry));
    }

    // Bound-feasibility of the fitted triangle / 4-complete scaling, with the
    // clique number of the last analyzable period.
    const PeriodReport* last = nullptr;
    for (auto it = bundle.periods.rbegin(); it != bundle.periods.rend(); ++it)
      if (it->ok) {
        last = &*it;
        break;
      }
    if (last != nullptr) {
      int w = 0;
      for (const auto& [lbl, g] : series.periods)
        if (lbl == last->period) w = clique_analysis(g).clique_number;
      const struct {
        const char* key;
        FeasibilitySubgraph sg;
        int min_w;
      } targets[] = {{"M_7_3", FeasibilitySubgraph::triangle, 3},
                     {"M_63_4", FeasibilitySubgraph::four_complete, 4}};
      for (const auto& t : targets) {
        for (const auto& entry : bundle.scaling) {
          if (entry.class_key != t.key || !entry.ok) continue;
          if (w >= t.min_w) {
            FeasibilityEntry fe{t.key, "fixed_w", w,
                                scaling_feasibility(entry.fit.intercept, entry.fit.slope, t.sg,
                                                    CliquePolicy::fixed_w, w)};
            bundle.feasibility.push_back(fe);
          }
          FeasibilityEntry fg{t.key, "growing_w", 0,
                              scaling_feasibility(entry.fit.intercept, entry.fit.slope, t.sg,
                                                  CliquePolicy::growing_w)};
          bundle.feasibility.push_back(fg);
        }
      }
    }
  }
  return bundle;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << body;
}

std::string sanitize(const std::string& label) {
  std::string out;
  for (char c : label) out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return out;
}

json zscore_json(const ZScoreReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json row{{"class", e.class_key}, {"observed", e.observed},
             {"mu", e.mu},           {"sigma", e.sigma},
             {"verdict", to_string(e.verdict)}};
    if (e.zp) {
      row["z"] = e.zp->z;
      row["p_emp"] = e.zp->p_empirical;
      row["p_boot"] = e.zp->p_bootstrap;
      row["z_boot_low"] = e.zp->z_boot_low;
      row["z_boot_high"] = e.zp->z_boot_high;
    }
    entries.push_back(std::move(row));
  }
  return json{{"ensemble", report.ensemble},
              {"seed", report.seed},
              {"discarded", report.discarded},
              {"rewire_exhausted", report.rewire_exhausted},
              {"classes", std::move(entries)}};
}

json period_json(const PeriodReport& rep, const RunConfig& cfg) {
  json j{{"period", rep.period}, {"ok", rep.ok}, {"n", rep.n}, {"m", rep.m}};
  if (!rep.ok) {
    j["error"] = rep.error;
    return j;
  }
  if (cfg.run_metrics)
    j["metrics"] = {{"density", rep.metrics.density},
                    {"diameter", rep.metrics.diameter},
                    {"average_path_length", rep.metrics.average_path_length},
                    {"clustering_overall", rep.metrics.clustering_overall},
                    {"clustering_average", rep.metrics.clustering_average},
                    {"connected", rep.metrics.connected},
                    {"largest_component", rep.metrics.largest_component_size}};
  if (cfg.run_census) {
    json census;
    for (const auto& [key, value] : census_flat(rep.census)) census[key] = value;
    j["census"] = std::move(census);
  }
  if (!rep.zscores.empty()) {
    json scans = json::array();
    for (const auto& scan : rep.zscores) scans.push_back(zscore_json(scan));
    j["motif_scans"] = std::move(scans);
  }
  if (cfg.run_centrality) {
    json tables = json::array();
    for (const auto& table : rep.rankings.top_k) {
      json rows = json::array();
      for (const auto& row : table)
        rows.push_back({{"rank", row.rank}, {"label", row.label}, {"value", row.value}});
      tables.push_back({{"measure", table.empty() ? "" : table.front().measure},
                        {"top", std::move(rows)}});
    }
    j["rankings"] = std::move(tables);
    json corr = json::array();
    for (std::size_t a = 0; a < rep.rankings.measures.size(); ++a)
      for (std::size_t b = a + 1; b < rep.rankings.measures.size(); ++b) {
        json cell{{"a", rep.rankings.measures[a]}, {"b", rep.rankings.measures[b]}};
        if (rep.rankings.correlations[a][b])
          cell["r"] = *rep.rankings.correlations[a][b];
        else
          cell["r"] = nullptr;
        corr.push_back(std::move(cell));
      }
    j["correlations"] = std::move(corr);
  }
  if (cfg.run_spatial) j["triangle_count"] = rep.triangles.size();
  if (rep.churn.added_pct) j["routes_added_pct"] = *rep.churn.added_pct;
  if (rep.churn.lost_pct) j["routes_lost_pct"] = *rep.churn.lost_pct;
  return j;
}

std::string svg_scatter(const ScalingEntry& entry,
                        const std::vector<std::pair<double, double>>& points) {
  // Minimal log-log scatter with the fitted line.
  const double w = 480, h = 360, pad = 40;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  std::vector<std::pair<double, double>> logs;
  for (auto [m, c] : points) {
    if (m <= 0 || c <= 0) continue;
    const double x = std::log(m), y = std::log(c);
    logs.emplace_back(x, y);
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  if (logs.empty() || xmax <= xmin) return "";
  if (ymax <= ymin) ymax = ymin + 1;
  auto sx = [&](double x) { return pad + (x - xmin) / (xmax - xmin) * (w - 2 * pad); };
  auto sy = [&](double y) { return h - pad - (y - ymin) / (ymax - ymin) * (h - 2 * pad); };
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) +
                    "\" height=\"" + fmt(h) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fmt(pad) + "\" y=\"20\" font-size=\"13\">" + entry.class_key +
         "  slope=" + fmt(entry.fit.slope) + "  R2=" + fmt(entry.fit.r_squared) + "</text>\n";
  for (auto [x, y] : logs)
    svg += "<circle cx=\"" + fmt(sx(x)) + "\" cy=\"" + fmt(sy(y)) + "\" r=\"3\" fill=\"steelblue\"/>\n";
  const double y1 = entry.fit.intercept + entry.fit.slope * xmin;
  const double y2 = entry.fit.intercept + entry.fit.slope * xmax;
  svg += "<line x1=\"" + fmt(sx(xmin)) + "\" y1=\"" + fmt(sy(y1)) + "\" x2=\"" + fmt(sx(xmax)) +
         "\" y2=\"" + fmt(sy(y2)) + "\" stroke=\"firebrick\"/>\n</svg>\n";
  return svg;
}

}  // namespace

void emit_reports(const ReportBundle& bundle, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw InputError("cannot create " + out_dir.string() + ": " + ec.message());
  const RunConfig& cfg = bundle.config;

  // manifest.json (the only file carrying a timestamp)
  {
    json nulls = json::array();
    for (auto kind : cfg.nulls) nulls.push_back(to_string(kind));
    json periods = json::array();
    for (const auto& rep : bundle.periods)
      periods.push_back({{"period", rep.period}, {"ok", rep.ok}, {"error", rep.error}});
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%FT%TZ", std::gmtime(&now));
    json manifest{
        {"version", kVersion},
        {"seed", cfg.master_seed},
        {"seed_provided", cfg.seed_provided},
        {"generated_at", stamp},
        {"config",
         {{"replications", cfg.replications},
          {"bootstrap", cfg.bootstrap},
          {"rewire_steps", cfg.rewire_steps},
          {"nulls", std::move(nulls)},
          {"extended_classes", cfg.extended_classes},
          {"top_k", cfg.top_k},
          {"kde_bandwidth", cfg.kde_bandwidth ? json(*cfg.kde_bandwidth) : json(nullptr)},
          {"anneal",
           {{"initial_temperature", cfg.anneal.initial_temperature},
            {"stop_energy", cfg.anneal.stop_energy},
            {"max_steps", cfg.anneal.max_steps}}}}},
        {"periods", std::move(periods)}};
    write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
  }

  for (const auto& rep : bundle.periods)
    write_file(out_dir / ("period_" + sanitize(rep.period) + ".json"),
               period_json(rep, cfg).dump(2) + "\n");

  if (cfg.run_metrics) {
    std::string csv =
        "period,n,m,density,diameter,average_path_length,clustering_overall,"
        "clustering_average,connected,largest_component,routes_added_pct,routes_lost_pct\n";
    for (const auto& rep : bundle.periods) {
      if (!rep.ok) continue;
      csv += rep.period + "," + std::to_string(rep.n) + "," + std::to_string(rep.m) + "," +
             fmt(rep.metrics.density) + "," + std::to_string(rep.metrics.diameter) + "," +
             fmt(rep.metrics.average_path_length) + "," + fmt(rep.metrics.clustering_overall) +
             "," + fmt(rep.metrics.clustering_average) + "," +
             (rep.metrics.connected ? "true" : "false") + "," +
             std::to_string(rep.metrics.largest_component_size) + "," +
             (rep.churn.added_pct ? fmt(*rep.churn.added_pct) : "") + "," +
             (rep.churn.lost_pct ? fmt(*rep.churn.lost_pct) : "") + "\n";
    }
    write_file(out_dir / "metrics.csv", csv);
  }

  if (cfg.run_census) {
    std::vector<std::string> keys;
    for (const auto& rep : bundle.periods)
      if (rep.ok) {
        for (const auto& [key, value] : census_flat(rep.census)) keys.push_back(key);
        break;
      }
    std::string csv = "period";
    for (const auto& key : keys) csv += "," + key;
    csv += "\n";
    for (const auto& rep : bundle.periods) {
      if (!rep.ok) continue;
      csv += rep.period;
      for (const auto& [key, value] : census_flat(rep.census)) csv += "," + std::to_string(value);
      csv += "\n";
    }
    write_file(out_dir / "census.csv", csv);
  }

  if (!cfg.nulls.empty()) {
    std::string csv = "period,ensemble,class,observed,mu,sigma,z,p_emp,p_boot,verdict,seed\n";
    for (const auto& rep : bundle.periods) {
      if (!rep.ok) continue;
      for (const auto& scan : rep.zscores)
        for (const auto& e : scan.entries) {
          csv += rep.period + "," + scan.ensemble + "," + e.class_key + "," +
                 std::to_string(e.observed) + "," + fmt(e.mu) + "," + fmt(e.sigma) + ",";
          csv += e.zp ? fmt(e.zp->z) : "";
          csv += ",";
          csv += e.zp ? fmt(e.zp->p_empirical) : "";
          csv += ",";
          csv += e.zp ? fmt(e.zp->p_bootstrap) : "";
          csv += "," + to_string(e.verdict) + "," + std::to_string(scan.seed) + "\n";
        }
    }
    write_file(out_dir / "zscores.csv", csv);
  }

  if (cfg.run_scaling) {
    std::string csv = "class,A,beta,R2,n_points,excluded_zeros,error\n";
    for (const auto& entry : bundle.scaling) {
      if (entry.ok)
        csv += entry.class_key + "," + fmt(entry.fit.amplitude()) + "," + fmt(entry.fit.slope) +
               "," + fmt(entry.fit.r_squared) + "," + std::to_string(entry.fit.n_points) + "," +
               std::to_string(entry.fit.excluded_zero) + ",\n";
      else
        csv += entry.class_key + ",,,,,," + entry.error + "\n";
    }
    write_file(out_dir / "scaling.csv", csv);

    if (!bundle.feasibility.empty()) {
      std::string fcsv = "class,policy,w,violated,crossover_m,c_w\n";
      for (const auto& fe : bundle.feasibility)
        fcsv += fe.class_key + "," + fe.policy + "," + std::to_string(fe.w) + "," +
                (fe.result.violated ? "true" : "false") + "," +
                (fe.result.violated ? fmt(fe.result.crossover_m) : "never") + "," +
                fmt(fe.result.c_w) + "\n";
      write_file(out_dir / "feasibility.csv", fcsv);
    }

    if (cfg.write_svg) {
      for (const auto& entry : bundle.scaling) {
        if (!entry.ok) continue;
        std::vector<std::pair<double, double>> points;
        for (const auto& rep : bundle.periods) {
          if (!rep.ok) continue;
          for (const auto& [k, value] : census_flat(rep.census))
            if (k == entry.class_key)
              points.emplace_back(static_cast<double>(rep.m), static_cast<double>(value));
        }
        const std::string svg = svg_scatter(entry, points);
        if (!svg.empty())
          write_file(out_dir / ("scaling_" + sanitize(entry.class_key) + ".svg"), svg);
      }
    }
  }

  if (cfg.run_centrality) {
    std::string csv = "period,measure,rank,label,value\n";
    for (const auto& rep : bundle.periods) {
      if (!rep.ok) continue;
      for (const auto& table : rep.rankings.top_k)
        for (const auto& row : table)
          csv += rep.period + "," + row.measure + "," + std::to_string(row.rank) + "," +
                 row.label + "," + fmt(row.value) + "\n";
    }
    write_file(out_dir / "centrality.csv", csv);
  }

  if (cfg.run_spatial) {
    std::string csv = "period,label1,label2,label3,lat,lon,area_sqmi\n";
    for (const auto& rep : bundle.periods) {
      if (!rep.ok) continue;
      for (const auto& t : rep.triangles)
        csv += rep.period + "," + t.labels[0] + "," + t.labels[1] + "," + t.labels[2] + "," +
               fmt(t.center.lat_deg) + "," + fmt(t.center.lon_deg) + "," + fmt(t.area_sqmi) + "\n";
    }
    write_file(out_dir / "triangles_geo.csv", csv);

    std::string kcsv = "period,x,f\n";
    for (const auto& rep : bundle.periods) {
      if (!rep.ok) continue;
      for (std::size_t i = 0; i < rep.area_density.x.size(); ++i)
        kcsv += rep.period + "," + fmt(rep.area_density.x[i]) + "," + fmt(rep.area_density.f[i]) +
                "\n";
    }
    write_file(out_dir / "kde_area.csv", kcsv);
  }
}

}  // namespace motifkit
