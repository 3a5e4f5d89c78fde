#include "motifkit/subgraph_atlas.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>

namespace motifkit {

std::vector<std::pair<int, int>> SubgraphClass::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j)
      if (edge(i, j)) out.emplace_back(i, j);
  return out;
}

namespace {

bool mask_connected(int b, std::uint32_t mask) {
  // BFS over the template; also requires every node reached (spanning).
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int i = 0; i < b; ++i) {
      if (!(frontier & (1u << i))) continue;
      for (int j = 0; j < b; ++j) {
        if (i == j || (seen & (1u << j))) continue;
        const int lo = std::min(i, j), hi = std::max(i, j);
        if (mask & pair_mask(b, lo, hi)) next |= 1u << j;
      }
    }
    seen |= next;
    frontier = next;
  }
  return seen == (1u << b) - 1;
}

std::uint32_t permuted_mask(int b, std::uint32_t mask, const int* perm) {
  std::uint32_t out = 0;
  for (int i = 0; i < b; ++i) {
    for (int j = i + 1; j < b; ++j) {
      int pi = perm[i], pj = perm[j];
      if (pi > pj) std::swap(pi, pj);
      if (mask & pair_mask(b, pi, pj)) out |= pair_mask(b, i, j);
    }
  }
  return out;
}

std::uint32_t min_code(int b, std::uint32_t mask) {
  std::array<int, 6> perm{};
  std::iota(perm.begin(), perm.begin() + b, 0);
  std::uint32_t best = permuted_mask(b, mask, perm.data());
  while (std::next_permutation(perm.begin(), perm.begin() + b))
    best = std::min(best, permuted_mask(b, mask, perm.data()));
  return best;
}

const char* known_name(int b, std::uint32_t code) {
  switch (b * 10000 + static_cast<int>(code)) {
    case 30003: return "3-star";
    case 30007: return "triangle";
    case 40011: return "4-star";
    case 40013: return "4-path";
    case 40015: return "tadpole";
    case 40030: return "4-circle";
    case 40031: return "diamond";
    case 40063: return "4-complete";
    case 50075: return "5-star";
    case 50079: return "cricket";
    case 50087: return "bull";
    case 50094: return "banner";
    case 50236: return "5-circle";
    case 61099: return "6-star";
    default: return "";
  }
}

}  // namespace

std::pair<int, std::uint32_t> canonical_code(int b, const std::vector<std::pair<int, int>>& edges) {
  if (b < 3 || b > 6) throw InputError("subgraph classes are supported for 3..6 nodes");
  std::uint32_t mask = 0;
  for (auto [i, j] : edges) {
    if (i == j || i < 0 || j < 0 || i >= b || j >= b) throw InputError("bad template edge");
    const int lo = std::min(i, j), hi = std::max(i, j);
    mask |= pair_mask(b, lo, hi);
  }
  if (!mask_connected(b, mask)) throw InputError("subgraph template is disconnected");
  return {b, min_code(b, mask)};
}

SubgraphClass make_class(int b, const std::vector<std::pair<int, int>>& edges, std::string name) {
  auto [bb, code] = canonical_code(b, edges);
  SubgraphClass cls;
  cls.b = bb;
  cls.code = code;
  cls.edge_count = __builtin_popcount(code);
  cls.name = name.empty() ? known_name(bb, code) : std::move(name);
  return cls;
}

Atlas::Atlas(int b) : b_(b) {
  const int nbits = pair_bits(b);
  const std::uint32_t nmask = std::uint32_t{1} << nbits;
  canon_.assign(nmask, kNotConnected);
  for (std::uint32_t mask = 0; mask < nmask; ++mask) {
    if (!mask_connected(b, mask)) continue;
    canon_[mask] = min_code(b, mask);
  }
  for (std::uint32_t mask = 0; mask < nmask; ++mask) {
    if (canon_[mask] != mask) continue;  // canonical representative only
    SubgraphClass cls;
    cls.b = b;
    cls.code = mask;
    cls.edge_count = __builtin_popcount(mask);
    cls.name = known_name(b, mask);
    classes_.push_back(std::move(cls));
  }
}

const Atlas& Atlas::for_size(int b) {
  if (b < 3 || b > 6) throw InputError("subgraph classes are supported for 3..6 nodes");
  static std::once_flag flags[4];
  static std::unique_ptr<Atlas> atlases[4];
  std::call_once(flags[b - 3], [b] { atlases[b - 3].reset(new Atlas(b)); });
  return *atlases[b - 3];
}

const SubgraphClass* Atlas::class_by_code(std::uint32_t code) const {
  for (const auto& c : classes_)
    if (c.code == code) return &c;
  return nullptr;
}

const std::vector<std::uint32_t>& Atlas::witness_table(std::uint32_t class_code) const {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& [code, table] : witness_)
    if (code == class_code) return *table;
  const SubgraphClass* cls = class_by_code(class_code);
  if (!cls) throw InputError("unknown class code " + std::to_string(class_code));

  const std::uint32_t nmask = std::uint32_t{1} << pair_bits(b_);
  auto table = std::make_unique<std::vector<std::uint32_t>>(nmask, 0);
  const int want_edges = cls->edge_count;
  for (std::uint32_t mask = 0; mask < nmask; ++mask) {
    if (canon_[mask] == kNotConnected) continue;  // hosts are induced connected sets
    std::uint32_t count = 0;
    // Enumerate submasks; only spanning connected ones can match a class.
    for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
      if (__builtin_popcount(sub) == want_edges && canon_[sub] == class_code) ++count;
      if (sub == 0) break;
    }
    (*table)[mask] = count;
  }
  witness_.emplace_back(class_code, std::move(table));
  return *witness_.back().second;
}

Ratio gamma_ratio(const SubgraphClass& cls) {
  // The ratio only grows with extra edges, so the max over all subgraphs is
  // attained at an induced subgraph on some node subset.
  const int b = cls.b;
  Ratio best{0, 1};
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << b); ++subset) {
    const int nodes = __builtin_popcount(subset);
    int edge_cnt = 0;
    for (int i = 0; i < b; ++i)
      for (int j = i + 1; j < b; ++j)
        if ((subset & (1u << i)) && (subset & (1u << j)) && cls.edge(i, j)) ++edge_cnt;
    // connectivity of the induced subgraph on the chosen nodes
    std::uint32_t seen = subset & (~subset + 1), frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (int i = 0; i < b; ++i) {
        if (!(frontier & (1u << i))) continue;
        for (int j = 0; j < b; ++j) {
          if (i == j || !(subset & (1u << j)) || (seen & (1u << j))) continue;
          if (cls.edge(i, j)) next |= 1u << j;
        }
      }
      seen |= next;
      frontier = next;
    }
    if (seen != subset) continue;
    if (static_cast<Count>(edge_cnt) * best.den > best.num * nodes)
      best = Ratio{edge_cnt, nodes};
  }
  return best;
}

namespace classes {

namespace {
SubgraphClass build(int b, std::initializer_list<std::pair<int, int>> edges) {
  return make_class(b, std::vector<std::pair<int, int>>(edges));
}
}  // namespace

#define MOTIFKIT_CLASS(fn, b, ...)                          \
  const SubgraphClass& fn() {                               \
    static const SubgraphClass cls = build(b, __VA_ARGS__); \
    return cls;                                             \
  }

MOTIFKIT_CLASS(three_star, 3, {{0, 1}, {0, 2}})
MOTIFKIT_CLASS(triangle, 3, {{0, 1}, {0, 2}, {1, 2}})
MOTIFKIT_CLASS(four_star, 4, {{0, 1}, {0, 2}, {0, 3}})
MOTIFKIT_CLASS(four_path, 4, {{0, 1}, {1, 2}, {2, 3}})
MOTIFKIT_CLASS(tadpole, 4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}})
MOTIFKIT_CLASS(four_circle, 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})
MOTIFKIT_CLASS(diamond, 4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})
MOTIFKIT_CLASS(four_complete, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})
MOTIFKIT_CLASS(five_star, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})
MOTIFKIT_CLASS(cricket, 5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}})
MOTIFKIT_CLASS(bull, 5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}})
MOTIFKIT_CLASS(banner, 5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}})
MOTIFKIT_CLASS(five_circle, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})
MOTIFKIT_CLASS(six_star, 6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})

#undef MOTIFKIT_CLASS

}  // namespace classes

}  // namespace motifkit
