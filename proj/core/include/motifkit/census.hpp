#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "motifkit/graph.hpp"
#include "motifkit/subgraph_atlas.hpp"

namespace motifkit {

/// Nested counts of the eight 3/4-node classes, by analytic formula.
/// A nested instance is any spanning edge-subset of some node set that forms
/// the class, so one node set can host several instances.
struct NestedCensus {
  Count three_star = 0;     // M_3^(3)
  Count triangle = 0;       // M_7^(3)
  Count four_star = 0;      // M_11^(4)
  Count four_path = 0;      // M_13^(4)
  Count tadpole = 0;        // M_15^(4)
  Count four_circle = 0;    // M_30^(4)
  Count diamond = 0;        // M_31^(4)
  Count four_complete = 0;  // M_63^(4)
};

/// Non-nested counts (induced occurrences) of the six classes that can be
/// nested; triangles and 4-completes are their own non-nested counts.
struct NonNestedCensus {
  Count three_star = 0;
  Count four_star = 0;
  Count four_path = 0;
  Count tadpole = 0;
  Count four_circle = 0;
  Count diamond = 0;
};

NestedCensus nested_census(const Graph& g);
NonNestedCensus nonnested_census(const NestedCensus& nested);
inline NonNestedCensus nonnested_census(const Graph& g) { return nonnested_census(nested_census(g)); }

/// Number of b-node stars: sum over nodes of C(k_i, b-1).
Count star_count(const Graph& g, int b);

enum class CountMode { nested, non_nested };

/// One subgraph occurrence: its (sorted) node set plus the witnessing edges.
/// For non-nested instances the edges are the full induced edge set; for
/// complete classes the node set alone determines the instance.
struct Instance {
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> edges;
};

/// Visit every instance: `nodes` is the sorted node set, `edge_submask` the
/// witnessing edges in template mask order over those nodes.
void visit_instances(const Graph& g, const SubgraphClass& cls, CountMode mode,
                     const std::function<void(std::span<const int>, std::uint32_t)>& visit);

std::vector<Instance> enumerate_instances(const Graph& g, const SubgraphClass& cls, CountMode mode);
Count count_instances(const Graph& g, const SubgraphClass& cls, CountMode mode);
/// Per node, the number of instances whose node set contains it.
std::vector<Count> membership_counts(const Graph& g, const SubgraphClass& cls, CountMode mode);

/// Raw i<j<k(<l) subset iteration, the second counting route for 3/4-node
/// classes (the extension engine above being the first).
Count count_by_subset_scan(const Graph& g, const SubgraphClass& cls, CountMode mode);

/// Loop-cost model of the symmetry-aware 4-circle listing versus four naive
/// full-range loops, at unit check cost.
struct RuntimeModel {
  double symmetry_aware;  // T(n) = (n-3)(3n^3 - n^2 + 6n + 16)/24
  double naive;           // T1(n) = n^4
  double ratio;           // T1/T -> 8 as n grows
};
RuntimeModel runtime_model(int n);

struct CliqueAnalysis {
  std::vector<std::vector<int>> maximal_cliques;  // each sorted, list sorted
  int clique_number = 0;                          // w
  std::array<Count, 4> complete_counts{};         // T_1..T_4
};
CliqueAnalysis clique_analysis(const Graph& g);

/// Upper bound on T_{h+1} given T_h and clique number w:
/// floor( C(w,h+1) * (T_h / C(w,h))^{(h+1)/h} ); zero when h >= w.
Count fisher_ryan_bound(Count t_h, int w, int h);

/// Full per-graph census for serialization. Extended mode adds the nested
/// counts of the five 5-node classes and the 6-star.
struct CensusReport {
  int n = 0;
  Count m = 0;
  NestedCensus nested;
  NonNestedCensus nonnested;
  std::vector<std::pair<std::string, Count>> extended;  // keyed "M_{a}_{b}"
};

CensusReport census_report(const Graph& g, bool extended_classes = false);

/// Flat key/value view: nested as "M_{a}_{b}", non-nested as "Mt_{a}_{b}".
std::vector<std::pair<std::string, Count>> census_flat(const CensusReport& report);

}  // namespace motifkit
