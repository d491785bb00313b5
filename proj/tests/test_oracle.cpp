#include "doctest.h"

#include <set>

#include "trevhc/comparisons.hpp"
#include "trevhc/linkage.hpp"
#include "trevhc/objective.hpp"
#include "trevhc/oracle.hpp"
#include "trevhc/similarity.hpp"

using namespace trevhc;

TEST_CASE("topology counts") {
  CHECK(count_trees(1) == 1);
  CHECK(count_trees(2) == 1);
  CHECK(count_trees(3) == 3);
  CHECK(count_trees(4) == 15);
  CHECK(count_trees(5) == 105);
  CHECK(count_trees(8) == 135135);
}

TEST_CASE("enumeration yields each topology exactly once") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> forms;
    std::uint64_t visited = 0;
    enumerate_trees(n, [&](const Dendrogram& tree) {
      ++visited;
      CHECK(tree.leaf_count() == n);
      forms.insert(canonical_form(tree));
    });
    CHECK(visited == count_trees(n));
    CHECK(forms.size() == count_trees(n));
  }
  std::uint64_t count8 = 0;
  enumerate_trees(8, [&](const Dendrogram&) { ++count8; });
  CHECK(count8 == count_trees(8));

  CHECK_THROWS_AS(enumerate_trees(10, [](const Dendrogram&) {}), std::invalid_argument);
  std::uint64_t forced = 0;
  enumerate_trees(3, [&](const Dendrogram&) { ++forced; }, 10);
  CHECK(forced == 3);
}

TEST_CASE("brute force recovers the latent tree from its triplets") {
  Rng rng(70);
  for (int n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto latent = random_tree(n, rng);
      const auto result = brute_force_max_trev(triplets_from_tree(latent), n);
      CHECK(result.unique);
      CHECK(is_isomorphic(result.tree, latent));
      CHECK(result.value == latent_trev_closed_form(latent));
    }
  }
}

TEST_CASE("brute force corner cases") {
  TripletSet cat_t0(3);
  cat_t0.insert({0, 1, 2});
  cat_t0.insert({1, 0, 2});
  const auto best = brute_force_max_trev(cat_t0, 3);
  CHECK(best.value == 2);
  CHECK(best.unique);

  const auto empty = brute_force_max_trev(TripletSet(3), 3);
  CHECK(empty.value == 0);
  CHECK_FALSE(empty.unique);
}

TEST_CASE("brute force consistency maximization") {
  Rng rng(71);
  for (int n = 3; n <= 6; ++n) {
    const auto latent = random_tree(n, rng);
    const auto t0 = triplets_from_tree(latent);
    const auto result = brute_force_max_consistency(t0, n);
    CHECK(result.unique);
    CHECK(result.value == static_cast<std::int64_t>(t0.size()));
    CHECK(is_isomorphic(result.tree, latent));
  }

  TripletSet single(3);
  single.insert({0, 1, 2});
  const auto best = brute_force_max_consistency(single, 3);
  CHECK(best.value == 1);
  CHECK(best.unique);
  CHECK(is_isomorphic(best.tree, Dendrogram::from_merges(3, {{0, 1}, {3, 2}})));

  const auto empty = brute_force_max_consistency(TripletSet(3), 3);
  CHECK(empty.value == 0);
  CHECK_FALSE(empty.unique);
}

TEST_CASE("sampled-revenue maximizer quality grows with the sampling rate") {
  const int n = 7;
  const int trials = 30;
  Rng rng(72);
  double previous = -1;
  for (const double p : {0.3, 0.6, 1.0}) {
    double ratio_sum = 0;
    for (int trial = 0; trial < trials; ++trial) {
      const auto latent = random_tree(n, rng);
      const auto t0 = triplets_from_tree(latent);
      const auto sample = sample_pairs_bernoulli(t0, SamplingParams{p, 1, 0.25}, rng);
      const auto best = brute_force_max_trev(sample, n);
      ratio_sum += static_cast<double>(trev(best.tree, t0)) /
                   static_cast<double>(latent_trev_closed_form(latent));
    }
    const double mean_ratio = ratio_sum / trials;
    CHECK(mean_ratio >= previous);
    if (p == 1.0) CHECK(mean_ratio == doctest::Approx(1.0));
    previous = mean_ratio;
  }
}
