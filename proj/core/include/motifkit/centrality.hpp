#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motifkit/census.hpp"
#include "motifkit/graph.hpp"

namespace motifkit {

struct CentralityVector {
  std::string measure;         // e.g. "DC", "B_S", "B_SM(M_7_3,nested)"
  std::vector<double> values;  // aligned to node index
};

/// k_i / (n-1) per node.
CentralityVector degree_centrality(const Graph& g);

/// Closed-walk subgraph centrality via the symmetric eigendecomposition:
/// B_S(i) = sum_j (v_j)_i^2 exp(lambda_j).
CentralityVector subgraph_centrality_estrada(const Graph& g);

/// Number of class instances whose node set contains node i.
CentralityVector membership_centrality(const Graph& g, const SubgraphClass& cls, CountMode mode);

/// Variant counting, per node, the distinct incident edges covered by some
/// instance of the class (an instance can contribute several).
CentralityVector membership_edge_cover(const Graph& g, const SubgraphClass& cls, CountMode mode);

struct RankEntry {
  int rank = 0;
  std::string measure;
  std::string label;
  double value = 0;
};

struct RankCorrelation {
  std::vector<std::vector<RankEntry>> top_k;  // one table per measure
  std::vector<std::string> measures;
  // Pearson correlations; missing when either vector has zero variance.
  std::vector<std::vector<std::optional<double>>> correlations;
};

/// Top-k per measure (ties broken lexicographically by label) plus the
/// pairwise linear correlation matrix across all nodes.
RankCorrelation rank_and_correlate(const Graph& g, const std::vector<CentralityVector>& vs, int k);

}  // namespace motifkit
