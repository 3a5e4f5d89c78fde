#include "motifkit/scaling.hpp"

#include <cmath>
#include <set>

namespace motifkit {

double RegressionFit::amplitude() const { return std::exp(intercept); }

RegressionFit loglog_fit(std::span<const std::pair<double, double>> points) {
  RegressionFit fit;
  std::vector<double> xs, ys;
  for (const auto& [m, count] : points) {
    if (m <= 0) throw InputError("log-log fit needs positive edge counts");
    if (count <= 0) {
      ++fit.excluded_zero;
      continue;
    }
    xs.push_back(std::log(m));
    ys.push_back(std::log(count));
  }
  const std::set<double> distinct(xs.begin(), xs.end());
  if (distinct.size() < 2) throw InputError("log-log fit needs at least 2 distinct edge counts");

  const std::size_t n = xs.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.n_points = static_cast<int>(n);

  double ss_res = 0, ss_tot = 0, scale = 0;
  fit.residuals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    fit.residuals.push_back(r);
    ss_res += r * r;
    ss_tot += (ys[i] - my) * (ys[i] - my);
    scale += ys[i] * ys[i];
  }
  // Residuals at roundoff scale are a perfect fit even when the total
  // variance is itself roundoff (constant counts).
  if (ss_res <= 1e-20 * std::max(1.0, scale))
    fit.r_squared = 1.0;
  else
    fit.r_squared = 1.0 - ss_res / ss_tot;
  return fit;
}

double er_implied_slope(int b) {
  if (b < 3) throw InputError("implied slope is defined for b >= 3");
  return static_cast<double>(b) / 2.0;
}

void RegimeModelSpec::validate() const {
  if (n_star < 2 || n_final <= n_star)
    throw InputError("regime model needs 2 <= n_star < n_final");
}

std::vector<Graph> regime_model_build(const RegimeModelSpec& spec) {
  spec.validate();
  std::vector<Graph> out;
  out.reserve(spec.n_final - 1);
  std::vector<std::pair<int, int>> edges;
  for (int l = 2; l <= spec.n_final; ++l) {
    const int newcomer = l - 1;
    if (l <= spec.n_star) {
      edges.emplace_back(0, newcomer);  // star phase, fixed center 0
    } else {
      for (int u = 0; u < newcomer; ++u) edges.emplace_back(u, newcomer);
    }
    out.push_back(Graph::from_index_edges(l, edges));
  }
  return out;
}

RegimePoint regime_analytic_counts(const RegimeModelSpec& spec, int l) {
  spec.validate();
  if (l < 2) throw InputError("regime model sizes start at l = 2");
  RegimePoint pt;
  if (l <= spec.n_star) {
    const Count m = l - 1;
    pt.edges = m;
    pt.three_stars = binomial(m, 2);
    return pt;
  }
  const Count a = l - spec.n_star;
  const Count ns = spec.n_star;
  // m = (a+1)(n* + a/2 - 1), kept integral as (a+1)(2n* + a - 2)/2
  pt.edges = exact_div(checked_mul(a + 1, 2 * ns + a - 2), 2, "regime edge count");
  pt.three_stars = exact_div(
      checked_mul(a + 1, checked_add(checked_mul(a, ns - 1),
                                     checked_mul(ns + a - 1, ns + a - 2))),
      2, "regime 3-star count");
  return pt;
}

FeasibilityResult scaling_feasibility(double alpha, double beta, FeasibilitySubgraph subgraph,
                                      CliquePolicy policy, int w) {
  const double critical = subgraph == FeasibilitySubgraph::triangle ? 1.5 : 2.0;
  FeasibilityResult out;
  if (policy == CliquePolicy::fixed_w) {
    const int min_w = subgraph == FeasibilitySubgraph::triangle ? 3 : 4;
    if (w < min_w) throw InputError("clique number too small for this subgraph");
    if (subgraph == FeasibilitySubgraph::triangle)
      out.c_w = std::log(static_cast<double>(w - 2)) -
                0.5 * std::log(4.5 * static_cast<double>(w - 1) * static_cast<double>(w));
    else
      out.c_w = std::log(static_cast<double>(binomial(w, 4))) -
                2.0 * std::log(static_cast<double>(binomial(w, 2)));
  } else {
    out.c_w = subgraph == FeasibilitySubgraph::triangle ? -0.5 * std::log(4.5) : -std::log(6.0);
  }
  if (beta <= critical) {
    out.violated = false;  // the bound's slope is never exceeded
    return out;
  }
  out.violated = true;
  out.crossover_m = std::exp((out.c_w - alpha) / (beta - critical));
  return out;
}

}  // namespace motifkit
