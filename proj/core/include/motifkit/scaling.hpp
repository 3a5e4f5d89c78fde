#pragma once

#include <span>
#include <utility>
#include <vector>

#include "motifkit/graph.hpp"

namespace motifkit {

struct RegressionFit {
  double intercept = 0;  // ln A
  double slope = 0;      // power-law exponent
  double r_squared = 0;  // 1 by convention for an exact (even constant) fit
  int n_points = 0;
  int excluded_zero = 0;  // dropped (m, 0) pairs, ln 0 being undefined
  std::vector<double> residuals;

  double amplitude() const;  // A = exp(intercept)
};

/// Least squares of ln(count) on a constant and ln(m). Natural logs
/// throughout. Throws when fewer than two distinct abscissae survive.
RegressionFit loglog_fit(std::span<const std::pair<double, double>> points);

/// The slope a power law in edges inherits in Erdos-Renyi sequences: b/2.
double er_implied_slope(int b);

/// Two-phase growth: star accretion up to n_star nodes, then every new node
/// links to all existing ones.
struct RegimeModelSpec {
  int n_star = 0;
  int n_final = 0;
  void validate() const;
};

/// Graphs for l = 2..n_final (index 0 holds l = 2).
std::vector<Graph> regime_model_build(const RegimeModelSpec& spec);

struct RegimePoint {
  Count edges = 0;
  Count three_stars = 0;
};
/// Closed forms for the model at size l; must equal the census of the built
/// graph at every l.
RegimePoint regime_analytic_counts(const RegimeModelSpec& spec, int l);

enum class FeasibilitySubgraph { triangle, four_complete };
enum class CliquePolicy { fixed_w, growing_w };

/// Where a fitted power law collides with the clique-number ceiling on
/// complete-subgraph counts: solves C(w) - alpha = (beta - crit) ln m, with
/// crit = 3/2 for triangles and 2 for 4-completes. Under the growing-clique
/// policy C(w) is replaced by its large-w limit.
struct FeasibilityResult {
  bool violated = false;    // false means the scaling never breaks the bound
  double crossover_m = 0;   // meaningful when violated
  double c_w = 0;           // ceiling constant used
};
FeasibilityResult scaling_feasibility(double alpha, double beta, FeasibilitySubgraph subgraph,
                                      CliquePolicy policy, int w = 0);

}  // namespace motifkit
