#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "motifkit/rng.hpp"
#include "motifkit/subgraph_atlas.hpp"

using namespace motifkit;

TEST_CASE("canonical codes of the named classes") {
  CHECK(classes::three_star().code == 3);
  CHECK(classes::triangle().code == 7);
  CHECK(classes::four_star().code == 11);
  CHECK(classes::four_path().code == 13);
  CHECK(classes::tadpole().code == 15);
  CHECK(classes::four_circle().code == 30);
  CHECK(classes::diamond().code == 31);
  CHECK(classes::four_complete().code == 63);
  CHECK(classes::five_star().code == 75);
  CHECK(classes::cricket().code == 79);
  CHECK(classes::bull().code == 87);
  CHECK(classes::banner().code == 94);
  CHECK(classes::five_circle().code == 236);
  CHECK(classes::six_star().code == 1099);
}

TEST_CASE("the four 4-star labellings read 56, 38, 21, 11") {
  // center first / second / third / last, upper triangle row-major
  auto raw_value = [](const std::vector<std::pair<int, int>>& edges) {
    std::uint32_t mask = 0;
    for (auto [i, j] : edges) mask |= pair_mask(4, std::min(i, j), std::max(i, j));
    return mask;
  };
  CHECK(raw_value({{0, 1}, {0, 2}, {0, 3}}) == 56);
  CHECK(raw_value({{1, 0}, {1, 2}, {1, 3}}) == 38);
  CHECK(raw_value({{2, 0}, {2, 1}, {2, 3}}) == 21);
  CHECK(raw_value({{3, 0}, {3, 1}, {3, 2}}) == 11);
  CHECK(canonical_code(4, {{0, 1}, {0, 2}, {0, 3}}).second == 11);
}

TEST_CASE("disconnected templates are rejected") {
  CHECK_THROWS_AS(canonical_code(4, {{0, 1}, {2, 3}}), InputError);
  CHECK_THROWS_AS(canonical_code(5, {{0, 1}, {1, 2}, {3, 4}}), InputError);
  CHECK_THROWS_AS(canonical_code(7, {{0, 1}}), InputError);  // b out of range
}

TEST_CASE("canonical code is invariant under relabeling") {
  SplitMix64 rng(11);
  const SubgraphClass targets[] = {classes::four_path(),  classes::tadpole(),
                                   classes::diamond(),    classes::cricket(),
                                   classes::banner(),     classes::five_circle()};
  for (const auto& cls : targets) {
    std::vector<int> perm(cls.b);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 30; ++trial) {
      for (int i = cls.b - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.next_below(static_cast<std::uint64_t>(i + 1))]);
      std::vector<std::pair<int, int>> relabeled;
      for (auto [i, j] : cls.edges()) relabeled.emplace_back(perm[i], perm[j]);
      CHECK(canonical_code(cls.b, relabeled).second == cls.code);
    }
  }
}

TEST_CASE("atlas sizes match the connected graph counts") {
  CHECK(Atlas::for_size(3).classes().size() == 2);
  CHECK(Atlas::for_size(4).classes().size() == 6);
  CHECK(Atlas::for_size(5).classes().size() == 21);
}

TEST_CASE("witness tables on complete hosts") {
  const Atlas& atlas = Atlas::for_size(4);
  const std::uint32_t complete_mask = (1u << pair_bits(4)) - 1;
  // A 4-set with all six edges hosts 12 4-paths, 4 + 4*3 labeled stars, ...
  CHECK(atlas.witness_table(classes::four_path().code)[complete_mask] == 12);
  CHECK(atlas.witness_table(classes::four_star().code)[complete_mask] == 4);
  CHECK(atlas.witness_table(classes::tadpole().code)[complete_mask] == 12);
  CHECK(atlas.witness_table(classes::four_circle().code)[complete_mask] == 3);
  CHECK(atlas.witness_table(classes::diamond().code)[complete_mask] == 6);
  CHECK(atlas.witness_table(classes::four_complete().code)[complete_mask] == 1);
}

TEST_CASE("gamma ratios") {
  CHECK(gamma_ratio(classes::triangle()) == Ratio{1, 1});
  CHECK(gamma_ratio(classes::three_star()) == Ratio{2, 3});
  CHECK(gamma_ratio(classes::four_complete()) == Ratio{3, 2});
  CHECK(gamma_ratio(classes::four_circle()) == Ratio{1, 1});
  CHECK(gamma_ratio(classes::five_star()) == Ratio{4, 5});
}
