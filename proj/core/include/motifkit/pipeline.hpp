#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "motifkit/census.hpp"
#include "motifkit/centrality.hpp"
#include "motifkit/geo.hpp"
#include "motifkit/graph.hpp"
#include "motifkit/ingest.hpp"
#include "motifkit/null_models.hpp"
#include "motifkit/scaling.hpp"

namespace motifkit {

inline constexpr const char* kVersion = "0.1.0";

struct RunConfig {
  std::uint64_t master_seed = 0;
  bool seed_provided = false;  // generated seeds are recorded in the manifest
  int replications = 1000;
  int bootstrap = 100;
  std::int64_t rewire_steps = -1;  // -1 -> 100 * m
  std::vector<EnsembleKind> nulls;
  bool extended_classes = false;
  bool run_metrics = true;
  bool run_census = true;
  bool run_centrality = false;
  bool run_scaling = false;
  bool run_spatial = false;
  int top_k = 10;
  std::optional<double> kde_bandwidth;
  bool write_svg = false;
  AnnealConfig anneal;
};

struct PeriodReport {
  std::string period;
  bool ok = true;
  std::string error;
  int n = 0;
  Count m = 0;
  GraphMetrics metrics;
  CensusReport census;
  std::vector<ZScoreReport> zscores;
  std::vector<CentralityVector> centralities;
  RankCorrelation rankings;
  std::vector<TriangleGeometry> triangles;
  DensityCurve area_density;  // empty x/f when not computed
  EdgeChurn churn;            // vs previous period; both empty for the first
};

struct ScalingEntry {
  std::string class_key;
  bool ok = false;
  std::string error;
  RegressionFit fit;
};

struct FeasibilityEntry {
  std::string class_key;
  std::string policy;  // "fixed_w" or "growing_w"
  int w = 0;
  FeasibilityResult result;
};

struct ReportBundle {
  std::vector<PeriodReport> periods;
  std::vector<ScalingEntry> scaling;
  std::vector<FeasibilityEntry> feasibility;
  RunConfig config;
};

ReportBundle run_pipeline(const PeriodSeries& series, const RunConfig& config);

/// Writes manifest.json, per-period JSON reports, the CSV time series
/// (metrics, census, zscores, scaling, centrality, triangles_geo, kde_area)
/// and optional log-log SVG plots. Reruns with the same seed produce
/// byte-identical files apart from the manifest timestamp.
void emit_reports(const ReportBundle& bundle, const std::filesystem::path& out_dir);

}  // namespace motifkit
