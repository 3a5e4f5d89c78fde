// Command-line front end: one verb per analysis stage, `pipeline` for the
// whole battery. CSV in, JSON/CSV/SVG out.

#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "motifkit/pipeline.hpp"

namespace {

using motifkit::EnsembleKind;
using motifkit::RunConfig;

struct CommonArgs {
  std::string input;
  std::string airports;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

void add_io(CLI::App* cmd, CommonArgs& args, bool needs_airports) {
  cmd->add_option("--input", args.input, "edge list CSV (period,src,dst)")->required();
  cmd->add_option("--out", args.out_dir, "output directory")->required();
  auto* airports = cmd->add_option("--airports", args.airports, "coordinate CSV (label,lat_deg,lon_deg)");
  if (needs_airports) airports->required();
}

void add_seed(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--seed", args.seed, "master seed (generated and recorded when omitted)")
      ->each([&args](const std::string&) { args.seed_given = true; });
}

EnsembleKind parse_null(const std::string& name) {
  if (name == "gnp") return EnsembleKind::gnp;
  if (name == "rewire") return EnsembleKind::rewire;
  if (name == "anneal") return EnsembleKind::rewire_anneal;
  throw CLI::ValidationError("--null", "expected gnp|rewire|anneal");
}

int run(const CommonArgs& args, RunConfig cfg) {
  motifkit::PeriodSeries series = motifkit::parse_edges_file(args.input);
  if (!args.airports.empty()) series.coords = motifkit::parse_airports_file(args.airports);

  cfg.master_seed = args.seed;
  cfg.seed_provided = args.seed_given;
  if (!cfg.seed_provided && !cfg.nulls.empty()) {
    std::random_device rd;
    cfg.master_seed = (static_cast<std::uint64_t>(rd()) << 32) | rd();
  }
  auto bundle = motifkit::run_pipeline(series, cfg);
  motifkit::emit_reports(bundle, args.out_dir);

  bool all_ok = true;
  for (const auto& rep : bundle.periods) {
    if (!rep.ok) {
      all_ok = false;
      std::cerr << nlohmann::json{{"period", rep.period}, {"error", rep.error}}.dump() << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"small-subgraph census, motif and spatial analysis of network time series"};
  app.require_subcommand(1);

  CommonArgs args;
  RunConfig cfg;
  cfg.run_metrics = false;
  cfg.run_census = false;

  std::string null_name = "gnp";
  std::string classes = "basic";

  auto* census = app.add_subcommand("census", "nested and non-nested subgraph counts");
  add_io(census, args, false);
  census->add_option("--classes", classes, "basic (3/4-node) or extended (adds 5-node and 6-star)")
      ->check(CLI::IsMember({"basic", "extended"}));

  auto* motifs = app.add_subcommand("motifs", "z-scores against a randomized null ensemble");
  add_io(motifs, args, false);
  add_seed(motifs, args);
  motifs->add_option("--null", null_name, "gnp|rewire|anneal")->required();
  motifs->add_option("--replications", cfg.replications, "null ensemble size R");
  motifs->add_option("--bootstrap", cfg.bootstrap, "bootstrap resamples B");
  motifs->add_option("--rewire-steps", cfg.rewire_steps, "successful switches per chain (default 100*m)");

  auto* scaling = app.add_subcommand("scaling", "log-log count fits across periods");
  add_io(scaling, args, false);
  scaling->add_option("--classes", classes, "basic or extended")
      ->check(CLI::IsMember({"basic", "extended"}));
  scaling->add_flag("--svg", cfg.write_svg, "emit per-class scatter SVGs");

  auto* centrality = app.add_subcommand("centrality", "node rankings and correlations");
  add_io(centrality, args, false);
  centrality->add_option("--top", cfg.top_k, "rows per ranking table");

  auto* spatial = app.add_subcommand("spatial", "triangle geometry and area densities");
  add_io(spatial, args, true);
  double bandwidth = 0;
  auto* bw = spatial->add_option("--bandwidth", bandwidth, "explicit KDE bandwidth");

  auto* pipeline = app.add_subcommand("pipeline", "full per-period analysis");
  add_io(pipeline, args, false);
  add_seed(pipeline, args);
  std::vector<std::string> null_names;
  pipeline->add_option("--null", null_names, "null ensembles to scan (repeatable)");
  pipeline->add_option("--replications", cfg.replications, "null ensemble size R");
  pipeline->add_option("--bootstrap", cfg.bootstrap, "bootstrap resamples B");
  pipeline->add_option("--rewire-steps", cfg.rewire_steps, "successful switches per chain");
  pipeline->add_option("--classes", classes, "basic or extended")
      ->check(CLI::IsMember({"basic", "extended"}));
  pipeline->add_option("--top", cfg.top_k, "rows per ranking table");
  pipeline->add_flag("--svg", cfg.write_svg, "emit per-class scatter SVGs");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.extended_classes = classes == "extended";
    if (census->parsed()) {
      cfg.run_census = true;
      cfg.run_metrics = true;
    } else if (motifs->parsed()) {
      cfg.run_census = true;
      cfg.nulls = {parse_null(null_name)};
    } else if (scaling->parsed()) {
      cfg.run_census = true;
      cfg.run_metrics = true;
      cfg.run_scaling = true;
    } else if (centrality->parsed()) {
      cfg.run_centrality = true;
    } else if (spatial->parsed()) {
      cfg.run_spatial = true;
      if (!bw->empty()) cfg.kde_bandwidth = bandwidth;
    } else if (pipeline->parsed()) {
      cfg.run_census = true;
      cfg.run_metrics = true;
      cfg.run_scaling = true;
      cfg.run_centrality = true;
      cfg.run_spatial = !args.airports.empty();
      for (const auto& name : null_names) cfg.nulls.push_back(parse_null(name));
    }
    return run(args, cfg);
  } catch (const motifkit::InputError& e) {
    std::cerr << nlohmann::json{{"errors", {e.what()}}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"errors", {e.what()}}, {"internal", true}}.dump() << "\n";
    return 2;
  }
}
