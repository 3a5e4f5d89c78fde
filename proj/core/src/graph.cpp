#include "motifkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace motifkit {

void Graph::finish(int n, std::vector<std::pair<int, int>> edges, std::vector<std::string> labels) {
  n_ = n;
  words_ = static_cast<std::size_t>((n + 63) / 64);
  adj_.assign(static_cast<std::size_t>(n) * words_, 0);
  degree_.assign(n, 0);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto& [i, j] : edges) {
    adj_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    adj_[static_cast<std::size_t>(j) * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
    ++degree_[i];
    ++degree_[j];
  }
  edges_ = std::move(edges);
  if (labels.empty()) {
    labels.reserve(n);
    int width = 1;
    for (int v = n - 1; v >= 10; v /= 10) ++width;
    for (int i = 0; i < n; ++i) {
      std::string s = std::to_string(i);
      labels.push_back("v" + std::string(width - s.size(), '0') + s);
    }
  }
  labels_ = std::move(labels);
}

Graph Graph::from_edge_list(const std::vector<std::pair<std::string, std::string>>& edges) {
  if (edges.empty()) throw InputError("edge list is empty");
  std::set<std::string> label_set;
  for (std::size_t r = 0; r < edges.size(); ++r) {
    const auto& [a, b] = edges[r];
    if (a.empty() || b.empty())
      throw InputError("edge row " + std::to_string(r + 1) + " has an empty label");
    if (a == b)
      throw InputError("edge row " + std::to_string(r + 1) + " is a self-loop: (" + a + ", " + b + ")");
    label_set.insert(a);
    label_set.insert(b);
  }
  std::vector<std::string> labels(label_set.begin(), label_set.end());  // lexicographic
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) index[labels[i]] = i;

  std::vector<std::pair<int, int>> idx_edges;
  idx_edges.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    int i = index[a], j = index[b];
    if (i > j) std::swap(i, j);
    idx_edges.emplace_back(i, j);
  }
  Graph g;
  const int n = static_cast<int>(labels.size());
  g.finish(n, std::move(idx_edges), std::move(labels));
  return g;
}

Graph Graph::from_index_edges(int n, const std::vector<std::pair<int, int>>& edges,
                              std::vector<std::string> labels) {
  if (n < 1) throw InputError("graph needs at least one node");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw InputError("label count does not match node count");
  std::vector<std::pair<int, int>> idx_edges;
  idx_edges.reserve(edges.size());
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw InputError("edge index out of range");
    if (i == j) throw InputError("self-loop on node " + std::to_string(i));
    if (i > j) std::swap(i, j);
    idx_edges.emplace_back(i, j);
  }
  Graph g;
  g.finish(n, std::move(idx_edges), std::move(labels));
  return g;
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return from_index_edges(n, e);
}

Graph Graph::cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  if (n > 2) e.emplace_back(0, n - 1);
  return from_index_edges(n, e);
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_index_edges(n, e);
}

Graph Graph::star(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return from_index_edges(n, e);
}

std::optional<int> Graph::index_of(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it != labels_.end() && *it == label) return static_cast<int>(it - labels_.begin());
  // Synthetic labels are index-ordered but not necessarily sorted inputs.
  auto lin = std::find(labels_.begin(), labels_.end(), label);
  if (lin != labels_.end()) return static_cast<int>(lin - labels_.begin());
  return std::nullopt;
}

std::vector<int> Graph::components() const {
  std::vector<int> comp(n_, -1);
  int next = 0;
  std::deque<int> queue;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    queue.push_back(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for_each_neighbor(u, [&](int v) {
        if (comp[v] < 0) {
          comp[v] = next;
          queue.push_back(v);
        }
      });
    }
    ++next;
  }
  return comp;
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  auto comp = components();
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

namespace {

// Unweighted single-source distances; -1 marks unreachable nodes.
void bfs_distances(const Graph& g, int src, std::vector<int>& dist, std::deque<int>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  dist[src] = 0;
  queue.clear();
  queue.push_back(src);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    g.for_each_neighbor(u, [&](int v) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    });
  }
}

}  // namespace

GraphMetrics global_metrics(const Graph& g) {
  const int n = g.node_count();
  if (n == 0) throw InputError("metrics of an empty graph");
  GraphMetrics out;
  out.density = g.density();

  auto comp = g.components();
  int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> comp_size(ncomp, 0);
  for (int c : comp) ++comp_size[c];
  int big = static_cast<int>(std::max_element(comp_size.begin(), comp_size.end()) - comp_size.begin());
  out.connected = ncomp == 1;
  out.largest_component_size = comp_size[big];

  // Diameter / APL by all-pairs BFS over the largest component.
  std::vector<int> dist(n);
  std::deque<int> queue;
  Count pair_count = 0, dist_sum = 0;
  int diameter = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != big) continue;
    bfs_distances(g, s, dist, queue);
    for (int t = 0; t < n; ++t) {
      if (t == s || comp[t] != big) continue;
      dist_sum += dist[t];
      ++pair_count;
      diameter = std::max(diameter, dist[t]);
    }
  }
  out.diameter = diameter;
  out.average_path_length = pair_count > 0 ? static_cast<double>(dist_sum) / static_cast<double>(pair_count) : 0.0;

  // Clustering from triangles-per-node and connected triples.
  Count triples = 0;       // sum of C(k_i, 2)
  Count triangle_ends = 0; // sum over nodes of triangles containing the node
  double local_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const Count k = g.degree(i);
    triples += binomial(k, 2);
    Count tri_i2 = 0;  // twice the triangles at i
    g.for_each_neighbor(i, [&](int j) { tri_i2 += g.common_neighbors(i, j); });
    const Count tri_i = exact_div(tri_i2, 2, "local triangle count");
    triangle_ends += tri_i;
    if (k >= 2) local_sum += static_cast<double>(tri_i) / static_cast<double>(binomial(k, 2));
  }
  const Count triangles = exact_div(triangle_ends, 3, "triangle count");
  out.clustering_overall =
      triples > 0 ? 3.0 * static_cast<double>(triangles) / static_cast<double>(triples) : 0.0;
  out.clustering_average = n > 0 ? local_sum / n : 0.0;
  return out;
}

DegreeStats degree_stats(const Graph& g) {
  const int n = g.node_count();
  if (n < 2) throw InputError("degree stats need at least two nodes");
  DegreeStats s;
  s.degrees.resize(n);
  s.centrality.resize(n);
  for (int i = 0; i < n; ++i) {
    const Count k = g.degree(i);
    s.degrees[i] = static_cast<int>(k);
    s.centrality[i] = static_cast<double>(k) / (n - 1);
    s.sum_k = checked_add(s.sum_k, k);
    s.sum_k2 = checked_add(s.sum_k2, checked_mul(k, k));
    s.sum_k3 = checked_add(s.sum_k3, checked_mul(checked_mul(k, k), k));
    ++s.histogram[static_cast<int>(k)];
  }
  s.mean_k = static_cast<double>(s.sum_k) / n;
  s.mean_k2 = static_cast<double>(s.sum_k2) / n;
  s.mean_k3 = static_cast<double>(s.sum_k3) / n;
  return s;
}

EdgeChurn edge_churn(const Graph& prev, const Graph& curr) {
  // Compare by label pairs: the index spaces of the two snapshots differ.
  auto label_edges = [](const Graph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [i, j] : g.edges()) {
      std::string a = g.label(i), b = g.label(j);
      if (b < a) std::swap(a, b);
      out.emplace(std::move(a), std::move(b));
    }
    return out;
  };
  const auto ep = label_edges(prev);
  const auto ec = label_edges(curr);
  Count added = 0, lost = 0;
  for (const auto& e : ec)
    if (!ep.count(e)) ++added;
  for (const auto& e : ep)
    if (!ec.count(e)) ++lost;
  EdgeChurn churn;
  if (!ec.empty()) churn.added_pct = 100.0 * static_cast<double>(added) / static_cast<double>(ec.size());
  if (!ep.empty()) churn.lost_pct = 100.0 * static_cast<double>(lost) / static_cast<double>(ep.size());
  return churn;
}

}  // namespace motifkit
