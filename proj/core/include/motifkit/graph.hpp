#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "motifkit/common.hpp"

namespace motifkit {

/// Immutable simple undirected unweighted graph with a label <-> index map.
/// Adjacency is a dense symmetric bitset (desk-scale node counts by intent);
/// rows are exposed so counting kernels can run word-wise intersections.
class Graph {
 public:
  /// Build from labelled edge pairs: reversed and exact duplicates collapse,
  /// labels are sorted lexicographically before index assignment.
  /// Rejects self-loop rows (with the offending row) and empty input.
  static Graph from_edge_list(const std::vector<std::pair<std::string, std::string>>& edges);

  /// Build from index pairs on n nodes (synthetic families, null models).
  /// Labels default to zero-padded "v###" consistent with index order.
  static Graph from_index_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                std::vector<std::string> labels = {});

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  /// Star with the center at index 0.
  static Graph star(int n);

  int node_count() const { return n_; }
  Count edge_count() const { return static_cast<Count>(edges_.size()); }
  double density() const {
    return n_ < 2 ? 0.0 : 2.0 * static_cast<double>(edge_count()) / (static_cast<double>(n_) * (n_ - 1));
  }

  int degree(int i) const { return degree_[i]; }
  bool has_edge(int i, int j) const {
    return (adj_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  std::optional<int> index_of(const std::string& label) const;

  /// Edges as (i, j) with i < j, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::span<const std::uint64_t> row(int i) const {
    return {adj_.data() + static_cast<std::size_t>(i) * words_, words_};
  }
  std::size_t row_words() const { return words_; }

  template <typename F>
  void for_each_neighbor(int i, F&& f) const {
    const std::uint64_t* r = adj_.data() + static_cast<std::size_t>(i) * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        const int j = static_cast<int>(w * 64) + __builtin_ctzll(bits);
        f(j);
        bits &= bits - 1;
      }
    }
  }

  int common_neighbors(int i, int j) const {
    const std::uint64_t* a = adj_.data() + static_cast<std::size_t>(i) * words_;
    const std::uint64_t* b = adj_.data() + static_cast<std::size_t>(j) * words_;
    int c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += __builtin_popcountll(a[w] & b[w]);
    return c;
  }

  /// Component id per node (0-based, by discovery from lowest index).
  std::vector<int> components() const;
  bool connected() const;

 private:
  Graph() = default;
  void finish(int n, std::vector<std::pair<int, int>> edges, std::vector<std::string> labels);

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<int> degree_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> labels_;
};

struct GraphMetrics {
  double density = 0.0;
  int diameter = 0;                   // on the largest component when disconnected
  double average_path_length = 0.0;   // likewise
  double clustering_overall = 0.0;    // 3 * triangles / connected triples
  double clustering_average = 0.0;    // mean local triangle fraction
  bool connected = true;
  int largest_component_size = 0;
};

GraphMetrics global_metrics(const Graph& g);

struct DegreeStats {
  std::vector<int> degrees;
  std::vector<double> centrality;  // k_i / (n-1)
  Count sum_k = 0, sum_k2 = 0, sum_k3 = 0;
  double mean_k = 0.0, mean_k2 = 0.0, mean_k3 = 0.0;
  std::map<int, int> histogram;  // degree -> node count
};

DegreeStats degree_stats(const Graph& g);

/// Route churn between consecutive snapshots, in percent. A percentage is
/// missing when its denominator edge set is empty.
struct EdgeChurn {
  std::optional<double> added_pct;  // |E(curr)\E(prev)| / |E(curr)| * 100
  std::optional<double> lost_pct;   // |E(prev)\E(curr)| / |E(prev)| * 100
};

EdgeChurn edge_churn(const Graph& prev, const Graph& curr);

}  // namespace motifkit
