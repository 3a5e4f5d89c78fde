#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "motifkit/common.hpp"

namespace motifkit {

/// Upper-triangle adjacency masks for b-node templates, read row-major with
/// the (0,1) pair as the most significant bit, so the decimal value of a mask
/// is the code used in the M_a^(b) naming scheme.
constexpr int pair_bits(int b) { return b * (b - 1) / 2; }
constexpr int pair_index(int b, int i, int j) {  // requires i < j
  return i * b - i * (i + 1) / 2 + (j - i - 1);
}
constexpr std::uint32_t pair_mask(int b, int i, int j) {
  return std::uint32_t{1} << (pair_bits(b) - 1 - pair_index(b, i, j));
}

/// A connected b-node subgraph class, identified by the minimum decimal code
/// over all node relabelings of its upper-triangle adjacency.
struct SubgraphClass {
  int b = 0;
  std::uint32_t code = 0;  // canonical mask value
  int edge_count = 0;
  std::string name;  // optional human label ("triangle", "diamond", ...)

  bool edge(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return (code & pair_mask(b, i, j)) != 0;
  }
  std::vector<std::pair<int, int>> edges() const;
  /// Serialization key, e.g. "M_31_4".
  std::string key() const { return "M_" + std::to_string(code) + "_" + std::to_string(b); }
};

/// Canonical (b, code) of an explicit template given as edge pairs on nodes
/// 0..b-1. Minimizes over all b! relabelings (b <= 6 keeps this trivial).
/// Throws InputError when the template is disconnected or b out of 3..6.
std::pair<int, std::uint32_t> canonical_code(int b, const std::vector<std::pair<int, int>>& edges);

SubgraphClass make_class(int b, const std::vector<std::pair<int, int>>& edges,
                         std::string name = {});

/// Per-size registry of all connected classes plus the lookup tables used by
/// the enumeration engine:
///  - canon_of(mask): canonical code of any spanning connected mask,
///    kNotConnected otherwise;
///  - witness_table(code): for every host mask, the number of spanning
///    edge-subsets of that host isomorphic to the class (nesting counts).
class Atlas {
 public:
  static constexpr std::uint32_t kNotConnected = 0xFFFFFFFFu;

  static const Atlas& for_size(int b);  // built lazily, cached per size

  int size() const { return b_; }
  const std::vector<SubgraphClass>& classes() const { return classes_; }
  std::uint32_t canon_of(std::uint32_t mask) const { return canon_[mask]; }
  const SubgraphClass* class_by_code(std::uint32_t code) const;
  const std::vector<std::uint32_t>& witness_table(std::uint32_t class_code) const;

 private:
  explicit Atlas(int b);

  int b_ = 0;
  std::vector<std::uint32_t> canon_;  // size 2^pair_bits(b)
  std::vector<SubgraphClass> classes_;
  // witness tables built on first use, keyed by class code; pointers keep
  // returned references stable while the cache grows
  mutable std::vector<std::pair<std::uint32_t, std::unique_ptr<std::vector<std::uint32_t>>>> witness_;
};

/// Largest edges-per-node ratio over all connected subgraphs of the template.
Ratio gamma_ratio(const SubgraphClass& cls);

/// The classes discussed throughout: 3/4-node complete set, five 5-node
/// classes, and the 6-star.
namespace classes {
const SubgraphClass& three_star();     // M_3^(3)
const SubgraphClass& triangle();       // M_7^(3)
const SubgraphClass& four_star();      // M_11^(4)
const SubgraphClass& four_path();      // M_13^(4)
const SubgraphClass& tadpole();        // M_15^(4)
const SubgraphClass& four_circle();    // M_30^(4)
const SubgraphClass& diamond();        // M_31^(4)
const SubgraphClass& four_complete();  // M_63^(4)
const SubgraphClass& five_star();      // M_75^(5)
const SubgraphClass& cricket();        // M_79^(5)
const SubgraphClass& bull();           // M_87^(5)
const SubgraphClass& banner();         // M_94^(5)
const SubgraphClass& five_circle();    // M_236^(5)
const SubgraphClass& six_star();       // M_1099^(6)
}  // namespace classes

}  // namespace motifkit
