#include "doctest.h"

#include <map>
#include <set>

#include "trevhc/dendrogram.hpp"
#include "trevhc/oracle.hpp"

using namespace trevhc;

namespace {

Dendrogram caterpillar3() { return Dendrogram::from_merges(3, {{0, 1}, {3, 2}}); }

}  // namespace

TEST_CASE("build_from_merges validates the merge sequence") {
  const auto two = Dendrogram::from_merges(2, {{0, 1}});
  CHECK(two.cluster_size(two.root_id()) == 2);

  const auto cat = caterpillar3();
  const LcaSizeMatrix lca(cat);
  CHECK(lca.size(0, 1) == 2);
  CHECK(lca.size(0, 2) == 3);

  CHECK_THROWS_AS(Dendrogram::from_merges(3, {{0, 1}, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Dendrogram::from_merges(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Dendrogram::from_merges(3, {{0, 1}, {4, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Dendrogram::from_merges(2, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("lca size matrix") {
  const LcaSizeMatrix cat(caterpillar3());
  const int expected[3][3] = {{1, 2, 3}, {2, 1, 3}, {3, 3, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(cat.size(i, j) == expected[i][j]);

  const LcaSizeMatrix pair(Dendrogram::from_merges(2, {{0, 1}}));
  CHECK(pair.size(0, 1) == 2);

  const LcaSizeMatrix balanced(Dendrogram::from_merges(4, {{0, 1}, {2, 3}, {4, 5}}));
  CHECK(balanced.size(0, 1) == 2);
  CHECK(balanced.size(2, 3) == 2);
  CHECK(balanced.size(0, 2) == 4);
  CHECK(balanced.size(1, 3) == 4);
}

TEST_CASE("internal nodes in merge order") {
  const auto nodes = internal_nodes(caterpillar3());
  REQUIRE(nodes.size() == 2);
  CHECK(nodes[0].size == 2);
  CHECK(nodes[0].left_size == 1);
  CHECK(nodes[0].right_size == 1);
  CHECK(nodes[1].size == 3);
  CHECK(nodes[1].left_size == 2);
  CHECK(nodes[1].right_size == 1);

  const auto single = internal_nodes(Dendrogram::from_merges(2, {{0, 1}}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].size == 2);
}

TEST_CASE("every pair is counted at exactly one internal node") {
  // sum of left*right over internal nodes = C(n,2), over all topologies.
  for (int n = 2; n <= 6; ++n) {
    enumerate_trees(n, [&](const Dendrogram& tree) {
      long long pairs = 0;
      for (const auto& node : internal_nodes(tree))
        pairs += static_cast<long long>(node.left_size) * node.right_size;
      CHECK(pairs == static_cast<long long>(n) * (n - 1) / 2);
    });
  }
}

TEST_CASE("isomorphism ignores child order") {
  const auto cat = caterpillar3();
  const auto swapped = Dendrogram::from_merges(3, {{1, 0}, {2, 3}});
  CHECK(is_isomorphic(cat, swapped));

  const auto other = Dendrogram::from_merges(3, {{0, 2}, {3, 1}});
  CHECK_FALSE(is_isomorphic(cat, other));

  CHECK(is_isomorphic(Dendrogram::from_merges(1, {}), Dendrogram::from_merges(1, {})));
  CHECK_THROWS_AS(is_isomorphic(cat, Dendrogram::from_merges(2, {{0, 1}})),
                  std::invalid_argument);
}

TEST_CASE("isomorphism is an equivalence with canonical forms") {
  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(12));
    const auto tree = random_tree(n, rng);
    // Reversing every merge's pair order preserves the cluster family.
    auto merges = tree.merges();
    for (auto& [a, b] : merges) std::swap(a, b);
    const auto mirrored = Dendrogram::from_merges(n, merges);
    CHECK(canonical_form(tree) == canonical_form(mirrored));
    CHECK(is_isomorphic(tree, tree));
    CHECK(is_isomorphic(tree, mirrored));
    CHECK(is_isomorphic(mirrored, tree));
  }
}

TEST_CASE("random_tree drawing") {
  Rng rng(7);
  std::map<std::string, int> frequency;
  const int draws = 3000;
  for (int t = 0; t < draws; ++t) ++frequency[canonical_form(random_tree(3, rng))];
  REQUIRE(frequency.size() == 3);
  for (const auto& [form, count] : frequency)
    CHECK(std::abs(count / static_cast<double>(draws) - 1.0 / 3) < 0.03);

  Rng a(123), b(123);
  CHECK(random_tree(20, a).merges() == random_tree(20, b).merges());
  CHECK(random_tree(1, a).merges().empty());
}

TEST_CASE("complete planted tree") {
  const auto tree = complete_planted_tree(30, 3);
  CHECK(tree.leaf_count() == 240);
  const auto& root_merge = tree.merges().back();
  CHECK(tree.cluster_size(root_merge.first) == 120);
  CHECK(tree.cluster_size(root_merge.second) == 120);

  CHECK(complete_planted_tree(1, 0).leaf_count() == 1);

  const auto cherries = complete_planted_tree(2, 1);
  CHECK(cherries.leaf_count() == 4);
  CHECK(is_isomorphic(cherries, Dendrogram::from_merges(4, {{0, 1}, {2, 3}, {4, 5}})));
}

TEST_CASE("restriction contracts single-child nodes") {
  const auto cat = caterpillar3();
  const auto pair = restrict_to(cat, {0, 2});
  CHECK(pair.tree.leaf_count() == 2);
  CHECK(pair.old_label == std::vector<int>{0, 2});

  const auto full = restrict_to(cat, {0, 1, 2});
  CHECK(is_isomorphic(full.tree, cat));

  const auto leaf = restrict_to(cat, {1});
  CHECK(leaf.tree.leaf_count() == 1);

  CHECK_THROWS_AS(restrict_to(cat, {}), std::invalid_argument);
}

TEST_CASE("merge list round trip") {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(50));
    const auto tree = random_tree(n, rng);
    CHECK(parse_merge_list(serialize(tree)) == tree);
  }
  CHECK(serialize(caterpillar3()) == "n 3\n0 1\n3 2\n");
  CHECK_THROWS_AS(parse_merge_list("n 3\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_merge_list("x 3\n0 1\n3 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_merge_list("n 3\n0 1\n3 2"), std::invalid_argument);  // no trailing newline
  CHECK(parse_merge_list("# comment\nn 3\n0 1\n# mid\n3 2\n") == caterpillar3());
}

TEST_CASE("lca ultrametric property on random trees") {
  Rng rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(98));
    const LcaSizeMatrix lca(random_tree(n, rng));
    for (int reps = 0; reps < 200; ++reps) {
      const int i = static_cast<int>(rng.below(n));
      int j = static_cast<int>(rng.below(n - 1));
      if (j >= i) ++j;
      int k = static_cast<int>(rng.below(n));
      if (k == i || k == j) continue;
      int sizes[3] = {lca.size(i, j), lca.size(i, k), lca.size(j, k)};
      std::sort(sizes, sizes + 3);
      CHECK(sizes[1] == sizes[2]);
    }
  }
}

TEST_CASE("sum of lca sizes is (n^3 - n) / 3 for every tree") {
  Rng rng(5);
  for (int n : {2, 3, 10, 57, 200}) {
    const LcaSizeMatrix lca(random_tree(n, rng));
    long long total = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) total += lca.size(i, j);
    CHECK(total == (static_cast<long long>(n) * n * n - n) / 3);
  }
}

TEST_CASE("sum of |N1||N2||N|^2 is at least n^4 / 4") {
  const auto weighted = [](const Dendrogram& tree) {
    long long total = 0;
    for (const auto& node : internal_nodes(tree))
      total += static_cast<long long>(node.left_size) * node.right_size * node.size * node.size;
    return total;
  };
  for (int n = 2; n <= 6; ++n)
    enumerate_trees(n, [&](const Dendrogram& tree) {
      CHECK(4 * weighted(tree) >= static_cast<long long>(n) * n * n * n);
    });
  Rng rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(79));
    CHECK(4 * weighted(random_tree(n, rng)) >= static_cast<long long>(n) * n * n * n);
  }
}
