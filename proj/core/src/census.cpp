#include "motifkit/census.hpp"

#include <algorithm>
#include <cmath>

namespace motifkit {

namespace {

// Common neighbors of i and j restricted to a bitset row.
int common_in(const Graph& g, int i, int j, std::span<const std::uint64_t> within) {
  auto a = g.row(i);
  auto b = g.row(j);
  int c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += __builtin_popcountll(a[w] & b[w] & within[w]);
  return c;
}

}  // namespace

NestedCensus nested_census(const Graph& g) {
  const int n = g.node_count();
  NestedCensus c;
  const Count m = g.edge_count();

  // Degree-sum counts.
  for (int i = 0; i < n; ++i) {
    c.three_star = checked_add(c.three_star, binomial(g.degree(i), 2));
    c.four_star = checked_add(c.four_star, binomial(g.degree(i), 3));
  }

  // Edge-wise common-neighbor counts drive triangles, tadpoles, diamonds
  // and the 4-path correction term.
  Count closed3 = 0;                  // sum over edges of |N(i) ∩ N(j)| = 3 * triangles
  Count path_pairs = 0;               // sum over edges of (k_i-1)(k_j-1)
  std::vector<Count> walk3_diag(n, 0);  // (g^3)_ii = twice the triangles at i
  for (auto [i, j] : g.edges()) {
    const Count t = g.common_neighbors(i, j);
    closed3 = checked_add(closed3, t);
    path_pairs = checked_add(path_pairs,
                             checked_mul(Count{g.degree(i)} - 1, Count{g.degree(j)} - 1));
    c.diamond = checked_add(c.diamond, binomial(t, 2));
    walk3_diag[i] += t;
    walk3_diag[j] += t;
  }
  c.triangle = exact_div(closed3, 3, "triangle count");
  c.four_path = checked_sub(path_pairs, checked_mul(3, c.triangle));

  Count tadpole2 = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(i) > 2)
      tadpole2 = checked_add(tadpole2, checked_mul(walk3_diag[i], Count{g.degree(i)} - 2));
  c.tadpole = exact_div(tadpole2, 2, "tadpole count");

  // Closed 4-walks: trace of g^4 via all-pairs common-neighbor counts.
  Count closed4 = 0;
  for (int i = 0; i < n; ++i) closed4 = checked_add(closed4, checked_mul(g.degree(i), g.degree(i)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Count t = g.common_neighbors(i, j);
      closed4 = checked_add(closed4, checked_mul(2, checked_mul(t, t)));
    }
  c.four_circle = exact_div(
      checked_sub(checked_sub(closed4, checked_mul(4, c.three_star)), checked_mul(2, m)), 8,
      "4-circle count");

  // 4-completes: closed 3-walks inside each node's neighborhood subgraph.
  Count nbr_walks = 0;  // sum over i of tr(g_{-i}^3)
  for (int i = 0; i < n; ++i) {
    auto nbr = g.row(i);
    Count within = 0;  // sum over edges inside Γ(i) of common neighbors inside Γ(i)
    g.for_each_neighbor(i, [&](int j) {
      auto rj = g.row(j);
      for (std::size_t w = 0; w < nbr.size(); ++w) {
        std::uint64_t bits = rj[w] & nbr[w];
        while (bits) {
          const int b = static_cast<int>(w * 64) + __builtin_ctzll(bits);
          bits &= bits - 1;
          if (b > j) within += common_in(g, j, b, nbr);
        }
      }
    });
    nbr_walks = checked_add(nbr_walks, checked_mul(2, within));
  }
  c.four_complete = exact_div(nbr_walks, 24, "4-complete count");
  return c;
}

NonNestedCensus nonnested_census(const NestedCensus& c) {
  NonNestedCensus nn;
  nn.three_star = checked_sub(c.three_star, checked_mul(3, c.triangle));
  nn.four_star = c.four_star - c.tadpole + 2 * c.diamond - 4 * c.four_complete;
  nn.four_path =
      c.four_path - 2 * c.tadpole - 4 * c.four_circle + 6 * c.diamond - 12 * c.four_complete;
  nn.tadpole = c.tadpole - 4 * c.diamond + 12 * c.four_complete;
  nn.four_circle = c.four_circle - c.diamond + 3 * c.four_complete;
  nn.diamond = c.diamond - 6 * c.four_complete;
  for (Count v : {nn.three_star, nn.four_star, nn.four_path, nn.tadpole, nn.four_circle, nn.diamond})
    if (v < 0) throw InternalError("negative non-nested count");
  return nn;
}

Count star_count(const Graph& g, int b) {
  if (b < 3) throw InputError("star counts need b >= 3");
  Count total = 0;
  for (int i = 0; i < g.node_count(); ++i)
    total = checked_add(total, binomial(g.degree(i), b - 1));
  return total;
}

namespace {

// Extension enumeration of connected induced b-node sets (Wernicke's ESU):
// every set is visited exactly once, with its anchor node minimal. A grown
// candidate never re-enters the subtree of a sibling, and only exclusive
// neighbors (outside the subgraph's closed neighborhood) join the candidate
// pool, which is what rules out duplicates.
class ConnectedSetEnumerator {
 public:
  ConnectedSetEnumerator(const Graph& g, int b) : g_(g), b_(b), words_(g.row_words()) {}

  template <typename F>
  void run(F&& visit) {
    const int n = g_.node_count();
    std::vector<std::uint64_t> nbh(words_);
    for (int v = 0; v < n; ++v) {
      nodes_[0] = v;
      std::vector<int> ext;
      g_.for_each_neighbor(v, [&](int u) {
        if (u > v) ext.push_back(u);
      });
      auto rv = g_.row(v);
      for (std::size_t w = 0; w < words_; ++w) nbh[w] = rv[w];
      set_bit(nbh, v);
      extend(1, v, std::move(ext), nbh, visit);
    }
  }

 private:
  static void set_bit(std::vector<std::uint64_t>& bits, int i) {
    bits[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  static bool test_bit(const std::vector<std::uint64_t>& bits, int i) {
    return (bits[i >> 6] >> (i & 63)) & 1u;
  }

  template <typename F>
  void emit(F&& visit) {
    std::array<int, 6> sorted{};
    std::copy(nodes_.begin(), nodes_.begin() + b_, sorted.begin());
    std::sort(sorted.begin(), sorted.begin() + b_);
    visit(std::span<const int>(sorted.data(), b_));
  }

  template <typename F>
  void extend(int depth, int anchor, std::vector<int> ext,
              const std::vector<std::uint64_t>& nbh, F&& visit) {
    while (!ext.empty()) {
      const int w = ext.back();
      ext.pop_back();  // consumed for this branch and all remaining siblings
      nodes_[depth] = w;
      if (depth + 1 == b_) {
        emit(visit);
        continue;
      }
      std::vector<int> child_ext = ext;
      g_.for_each_neighbor(w, [&](int u) {
        if (u > anchor && !test_bit(nbh, u)) child_ext.push_back(u);
      });
      std::vector<std::uint64_t> child_nbh = nbh;
      auto rw = g_.row(w);
      for (std::size_t q = 0; q < words_; ++q) child_nbh[q] |= rw[q];
      set_bit(child_nbh, w);
      extend(depth + 1, anchor, std::move(child_ext), child_nbh, visit);
    }
  }

  const Graph& g_;
  int b_;
  std::size_t words_;
  std::array<int, 6> nodes_{};
};

std::uint32_t induced_mask(const Graph& g, std::span<const int> nodes) {
  const int b = static_cast<int>(nodes.size());
  std::uint32_t mask = 0;
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j)
      if (g.has_edge(nodes[i], nodes[j])) mask |= pair_mask(b, i, j);
  return mask;
}

}  // namespace

void visit_instances(const Graph& g, const SubgraphClass& cls, CountMode mode,
                     const std::function<void(std::span<const int>, std::uint32_t)>& visit) {
  if (cls.b < 3 || cls.b > 6) throw InputError("instance enumeration supports 3..6 node classes");
  const Atlas& atlas = Atlas::for_size(cls.b);
  const auto* witness = mode == CountMode::nested ? &atlas.witness_table(cls.code) : nullptr;
  ConnectedSetEnumerator esu(g, cls.b);
  esu.run([&](std::span<const int> nodes) {
    const std::uint32_t mask = induced_mask(g, nodes);
    if (mode == CountMode::non_nested) {
      if (atlas.canon_of(mask) == cls.code) visit(nodes, mask);
      return;
    }
    if ((*witness)[mask] == 0) return;
    // Emit each spanning edge-subset isomorphic to the class.
    for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
      if (__builtin_popcount(sub) == cls.edge_count && atlas.canon_of(sub) == cls.code)
        visit(nodes, sub);
      if (sub == 0) break;
    }
  });
}

std::vector<Instance> enumerate_instances(const Graph& g, const SubgraphClass& cls, CountMode mode) {
  std::vector<Instance> out;
  visit_instances(g, cls, mode, [&](std::span<const int> nodes, std::uint32_t edge_submask) {
    Instance inst;
    inst.nodes.assign(nodes.begin(), nodes.end());
    const int b = cls.b;
    for (int i = 0; i < b; ++i)
      for (int j = i + 1; j < b; ++j)
        if (edge_submask & pair_mask(b, i, j)) inst.edges.emplace_back(nodes[i], nodes[j]);
    out.push_back(std::move(inst));
  });
  std::sort(out.begin(), out.end(), [](const Instance& a, const Instance& b) {
    return a.nodes != b.nodes ? a.nodes < b.nodes : a.edges < b.edges;
  });
  return out;
}

Count count_instances(const Graph& g, const SubgraphClass& cls, CountMode mode) {
  const Atlas& atlas = Atlas::for_size(cls.b);
  const auto* witness = mode == CountMode::nested ? &atlas.witness_table(cls.code) : nullptr;
  Count total = 0;
  ConnectedSetEnumerator esu(g, cls.b);
  esu.run([&](std::span<const int> nodes) {
    const std::uint32_t mask = induced_mask(g, nodes);
    if (mode == CountMode::non_nested)
      total += atlas.canon_of(mask) == cls.code ? 1 : 0;
    else
      total += (*witness)[mask];
  });
  return total;
}

std::vector<Count> membership_counts(const Graph& g, const SubgraphClass& cls, CountMode mode) {
  const Atlas& atlas = Atlas::for_size(cls.b);
  const auto* witness = mode == CountMode::nested ? &atlas.witness_table(cls.code) : nullptr;
  std::vector<Count> per_node(g.node_count(), 0);
  ConnectedSetEnumerator esu(g, cls.b);
  esu.run([&](std::span<const int> nodes) {
    const std::uint32_t mask = induced_mask(g, nodes);
    Count weight = 0;
    if (mode == CountMode::non_nested)
      weight = atlas.canon_of(mask) == cls.code ? 1 : 0;
    else
      weight = (*witness)[mask];
    if (weight)
      for (int v : nodes) per_node[v] += weight;
  });
  return per_node;
}

Count count_by_subset_scan(const Graph& g, const SubgraphClass& cls, CountMode mode) {
  if (cls.b != 3 && cls.b != 4) throw InputError("subset scan covers 3/4-node classes");
  const Atlas& atlas = Atlas::for_size(cls.b);
  const auto* witness = mode == CountMode::nested ? &atlas.witness_table(cls.code) : nullptr;
  const int n = g.node_count();
  Count total = 0;
  auto tally = [&](std::uint32_t mask) {
    if (mode == CountMode::non_nested)
      total += atlas.canon_of(mask) == cls.code ? 1 : 0;
    else
      total += (*witness)[mask];
  };
  if (cls.b == 3) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          const int nodes[3] = {i, j, k};
          tally(induced_mask(g, std::span<const int>(nodes, 3)));
        }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          for (int l = k + 1; l < n; ++l) {
            const int nodes[4] = {i, j, k, l};
            tally(induced_mask(g, std::span<const int>(nodes, 4)));
          }
  }
  return total;
}

RuntimeModel runtime_model(int n) {
  if (n < 4) throw InputError("runtime model is defined for n >= 4");
  const Count nn = n;
  const Count poly = checked_mul(nn - 3, 3 * nn * nn * nn - nn * nn + 6 * nn + 16);
  RuntimeModel r;
  r.symmetry_aware = static_cast<double>(exact_div(poly, 24, "runtime model"));
  r.naive = std::pow(static_cast<double>(n), 4.0);
  r.ratio = r.naive / r.symmetry_aware;
  return r;
}

namespace {

using Words = std::vector<std::uint64_t>;

void bron_kerbosch(const Graph& g, Words& r, Words p, Words x,
                   std::vector<std::vector<int>>& out) {
  const std::size_t words = g.row_words();
  auto any = [&](const Words& s) {
    for (auto w : s)
      if (w) return true;
    return false;
  };
  if (!any(p) && !any(x)) {
    std::vector<int> clique;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        clique.push_back(static_cast<int>(w * 64) + __builtin_ctzll(bits));
        bits &= bits - 1;
      }
    }
    out.push_back(std::move(clique));
    return;
  }
  // Pivot: the P ∪ X node covering most of P.
  int pivot = -1, best_cover = -1;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t bits = p[w] | x[w];
    while (bits) {
      const int u = static_cast<int>(w * 64) + __builtin_ctzll(bits);
      bits &= bits - 1;
      auto ru = g.row(u);
      int cover = 0;
      for (std::size_t q = 0; q < words; ++q) cover += __builtin_popcountll(p[q] & ru[q]);
      if (cover > best_cover) {
        best_cover = cover;
        pivot = u;
      }
    }
  }
  Words candidates(words);
  auto rp = g.row(pivot);
  for (std::size_t w = 0; w < words; ++w) candidates[w] = p[w] & ~rp[w];
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t bits = candidates[w];
    while (bits) {
      const int v = static_cast<int>(w * 64) + __builtin_ctzll(bits);
      bits &= bits - 1;
      auto rv = g.row(v);
      Words p2(words), x2(words);
      for (std::size_t q = 0; q < words; ++q) {
        p2[q] = p[q] & rv[q];
        x2[q] = x[q] & rv[q];
      }
      r[v >> 6] |= std::uint64_t{1} << (v & 63);
      bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
      r[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
      p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
      x[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
  }
}

}  // namespace

CliqueAnalysis clique_analysis(const Graph& g) {
  const int n = g.node_count();
  const std::size_t words = g.row_words();
  Words r(words, 0), p(words, 0), x(words, 0);
  for (int i = 0; i < n; ++i) p[i >> 6] |= std::uint64_t{1} << (i & 63);
  CliqueAnalysis out;
  bron_kerbosch(g, r, std::move(p), std::move(x), out.maximal_cliques);
  for (auto& c : out.maximal_cliques) std::sort(c.begin(), c.end());
  std::sort(out.maximal_cliques.begin(), out.maximal_cliques.end());
  for (const auto& c : out.maximal_cliques)
    out.clique_number = std::max(out.clique_number, static_cast<int>(c.size()));
  const NestedCensus census = nested_census(g);
  out.complete_counts = {Count{n}, g.edge_count(), census.triangle, census.four_complete};
  return out;
}

Count fisher_ryan_bound(Count t_h, int w, int h) {
  if (h < 1) throw InputError("bound needs h >= 1");
  if (h >= w) return 0;  // C(w, h+1) vanishes
  if (t_h <= 0) return 0;
  const double denom = static_cast<double>(binomial(w, h));
  const double base = static_cast<double>(t_h) / denom;
  const double bound = static_cast<double>(binomial(w, h + 1)) *
                       std::pow(base, static_cast<double>(h + 1) / static_cast<double>(h));
  return static_cast<Count>(std::floor(bound));
}

CensusReport census_report(const Graph& g, bool extended_classes) {
  CensusReport rep;
  rep.n = g.node_count();
  rep.m = g.edge_count();
  rep.nested = nested_census(g);
  rep.nonnested = nonnested_census(rep.nested);

  const std::pair<Count, Count> pairs[] = {
      {rep.nonnested.three_star, rep.nested.three_star},
      {rep.nonnested.four_star, rep.nested.four_star},
      {rep.nonnested.four_path, rep.nested.four_path},
      {rep.nonnested.tadpole, rep.nested.tadpole},
      {rep.nonnested.four_circle, rep.nested.four_circle},
      {rep.nonnested.diamond, rep.nested.diamond},
  };
  for (auto [nn, nested] : pairs)
    if (nn > nested) throw InternalError("non-nested count exceeds nested count");

  if (extended_classes) {
    rep.extended.emplace_back(classes::five_star().key(), star_count(g, 5));
    for (const SubgraphClass* cls :
         {&classes::cricket(), &classes::bull(), &classes::banner(), &classes::five_circle()})
      rep.extended.emplace_back(cls->key(), count_instances(g, *cls, CountMode::nested));
    rep.extended.emplace_back(classes::six_star().key(), star_count(g, 6));
  }
  return rep;
}

std::vector<std::pair<std::string, Count>> census_flat(const CensusReport& rep) {
  std::vector<std::pair<std::string, Count>> out = {
      {"M_3_3", rep.nested.three_star},     {"M_7_3", rep.nested.triangle},
      {"M_11_4", rep.nested.four_star},     {"M_13_4", rep.nested.four_path},
      {"M_15_4", rep.nested.tadpole},       {"M_30_4", rep.nested.four_circle},
      {"M_31_4", rep.nested.diamond},       {"M_63_4", rep.nested.four_complete},
      {"Mt_3_3", rep.nonnested.three_star}, {"Mt_11_4", rep.nonnested.four_star},
      {"Mt_13_4", rep.nonnested.four_path}, {"Mt_15_4", rep.nonnested.tadpole},
      {"Mt_30_4", rep.nonnested.four_circle}, {"Mt_31_4", rep.nonnested.diamond},
  };
  out.insert(out.end(), rep.extended.begin(), rep.extended.end());
  return out;
}

}  // namespace motifkit
