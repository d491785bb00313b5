#include "doctest.h"

#include <filesystem>

#include "trevhc/evaluation.hpp"

using namespace trevhc;

TEST_CASE("cut_top") {
  const auto cat4 = Dendrogram::from_merges(4, {{0, 1}, {4, 2}, {5, 3}});
  CHECK(cut_top(cat4, 1).labels() == std::vector<int>{0, 0, 0, 0});
  CHECK(cut_top(cat4, 4).labels() == std::vector<int>{0, 1, 2, 3});
  CHECK(cut_top(cat4, 2).labels() == std::vector<int>{0, 0, 0, 1});
  CHECK_THROWS_AS(cut_top(cat4, 0), std::invalid_argument);
  CHECK_THROWS_AS(cut_top(cat4, 5), std::invalid_argument);
}

TEST_CASE("cut refinement chain") {
  Rng rng(61);
  const auto tree = random_tree(23, rng);
  for (int k = 1; k < 23; ++k) {
    const auto coarse = cut_top(tree, k);
    const auto fine = cut_top(tree, k + 1);
    // Same fine cluster implies same coarse cluster.
    for (int i = 0; i < 23; ++i)
      for (int j = i + 1; j < 23; ++j)
        if (fine.labels()[i] == fine.labels()[j])
          CHECK(coarse.labels()[i] == coarse.labels()[j]);
  }
}

TEST_CASE("adjusted rand index") {
  const Partition a({0, 0, 1, 1});
  CHECK(ari(a, a) == doctest::Approx(1.0));
  CHECK(ari(a, Partition({0, 1, 2, 3})) == doctest::Approx(0.0));

  // Symmetry and label invariance.
  const Partition b({1, 1, 0, 0});
  CHECK(ari(a, b) == doctest::Approx(1.0));
  const Partition c({0, 1, 1, 0});
  CHECK(ari(a, c) == doctest::Approx(ari(c, a)));

  CHECK(ari(Partition({0, 1, 2}), Partition({2, 1, 0})) == doctest::Approx(1.0));
  CHECK_THROWS_AS(ari(a, Partition({0, 1})), std::invalid_argument);

  // Chance correction: independent labelings score near zero on average.
  Rng rng(62);
  double total = 0;
  const int trials = 100;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<int> x(200), y(200);
    for (int i = 0; i < 200; ++i) {
      x[i] = static_cast<int>(rng.below(2));
      y[i] = static_cast<int>(rng.below(2));
    }
    x[0] = y[0] = 0;
    x[1] = y[1] = 1;  // keep both clusters nonempty
    total += std::abs(ari(Partition(x), Partition(y)));
  }
  CHECK(total / trials < 0.05);
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({0, 2}), std::invalid_argument);  // id 1 empty
  CHECK_THROWS_AS(Partition({-1, 0}), std::invalid_argument);
  CHECK(Partition({0}).cluster_count() == 1);
}

TEST_CASE("averaged ari over the top levels") {
  const auto truth = complete_planted_tree(2, 2);
  CHECK(aari(truth, truth, 2) == doctest::Approx(1.0));

  // Swapping two leaves inside one ground cluster leaves the top cuts alone.
  const auto swapped = relabel_leaves(truth, {1, 0, 2, 3, 4, 5, 6, 7});
  CHECK(aari(swapped, truth, 2) == doctest::Approx(1.0));

  CHECK_THROWS_AS(aari(truth, truth, 4), std::invalid_argument);  // 2^4 > 8
  CHECK_THROWS_AS(aari(truth, truth, 0), std::invalid_argument);
}

TEST_CASE("partition file round trip") {
  const Partition p({0, 1, 1, 2, 0});
  const auto path = std::filesystem::temp_directory_path() / "trevhc_partition.txt";
  write_partition(path, p);
  CHECK(read_partition(path).labels() == p.labels());
  std::filesystem::remove(path);
}
