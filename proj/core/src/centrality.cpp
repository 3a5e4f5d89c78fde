#include "motifkit/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Dense>

namespace motifkit {

CentralityVector degree_centrality(const Graph& g) {
  const int n = g.node_count();
  if (n < 2) throw InputError("degree centrality needs at least two nodes");
  CentralityVector v{"DC", {}};
  v.values.reserve(n);
  for (int i = 0; i < n; ++i)
    v.values.push_back(static_cast<double>(g.degree(i)) / (n - 1));
  return v;
}

CentralityVector subgraph_centrality_estrada(const Graph& g) {
  const int n = g.node_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [i, j] : g.edges()) {
    a(i, j) = 1.0;
    a(j, i) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) throw InputError("eigensolver failed to converge");
  const auto& lambda = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  CentralityVector v{"B_S", std::vector<double>(n, 0.0)};
  for (int j = 0; j < n; ++j) {
    const double w = std::exp(lambda(j));
    for (int i = 0; i < n; ++i) v.values[i] += vectors(i, j) * vectors(i, j) * w;
  }
  return v;
}

namespace {

std::string membership_name(const char* prefix, const SubgraphClass& cls, CountMode mode) {
  return std::string(prefix) + "(" + cls.key() + "," +
         (mode == CountMode::nested ? "nested" : "non-nested") + ")";
}

}  // namespace

CentralityVector membership_centrality(const Graph& g, const SubgraphClass& cls, CountMode mode) {
  CentralityVector v{membership_name("B_SM", cls, mode), {}};
  const auto counts = membership_counts(g, cls, mode);
  v.values.assign(counts.begin(), counts.end());
  return v;
}

CentralityVector membership_edge_cover(const Graph& g, const SubgraphClass& cls, CountMode mode) {
  // Union of witnessing edges over all instances, then incident edges per node.
  std::set<std::pair<int, int>> covered;
  visit_instances(g, cls, mode, [&](std::span<const int> nodes, std::uint32_t submask) {
    const int b = cls.b;
    for (int i = 0; i < b; ++i)
      for (int j = i + 1; j < b; ++j)
        if (submask & pair_mask(b, i, j)) covered.emplace(nodes[i], nodes[j]);
  });
  CentralityVector v{membership_name("B_SM_edges", cls, mode),
                     std::vector<double>(g.node_count(), 0.0)};
  for (auto [i, j] : covered) {
    v.values[i] += 1.0;
    v.values[j] += 1.0;
  }
  return v;
}

RankCorrelation rank_and_correlate(const Graph& g, const std::vector<CentralityVector>& vs,
                                   int k) {
  const int n = g.node_count();
  for (const auto& v : vs)
    if (static_cast<int>(v.values.size()) != n)
      throw InputError("centrality vector length does not match the graph");

  RankCorrelation out;
  for (const auto& v : vs) {
    out.measures.push_back(v.measure);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (v.values[a] != v.values[b]) return v.values[a] > v.values[b];
      return g.label(a) < g.label(b);
    });
    std::vector<RankEntry> table;
    const int limit = std::min(k, n);
    table.reserve(limit);
    for (int r = 0; r < limit; ++r)
      table.push_back({r + 1, v.measure, g.label(order[r]), v.values[order[r]]});
    out.top_k.push_back(std::move(table));
  }

  const std::size_t p = vs.size();
  out.correlations.assign(p, std::vector<std::optional<double>>(p));
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = a; b < p; ++b) {
      double ma = 0, mb = 0;
      for (int i = 0; i < n; ++i) {
        ma += vs[a].values[i];
        mb += vs[b].values[i];
      }
      ma /= n;
      mb /= n;
      double saa = 0, sbb = 0, sab = 0;
      for (int i = 0; i < n; ++i) {
        const double da = vs[a].values[i] - ma;
        const double db = vs[b].values[i] - mb;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
      }
      std::optional<double> r;
      if (saa > 0 && sbb > 0) r = sab / std::sqrt(saa * sbb);
      out.correlations[a][b] = r;
      out.correlations[b][a] = r;
    }
  }
  return out;
}

}  // namespace motifkit
