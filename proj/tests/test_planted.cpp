#include "doctest.h"

#include <cmath>
#include <set>

#include "trevhc/planted.hpp"

using namespace trevhc;

TEST_CASE("planted means follow the level structure") {
  // Two leaves, zero noise: the single cross pair sits one level below the
  // root, so its value is mu - separation exactly.
  PlantedParams tiny{1, 1, 0.8, 0.0, 0.3};
  Rng rng(1);
  const auto instance = planted_similarity(tiny, rng);
  CHECK(instance.similarity.n() == 2);
  CHECK(instance.similarity(0, 1) == doctest::Approx(0.5));
}

TEST_CASE("noiseless similarities take one value per level") {
  PlantedParams params{3, 2, 0.8, 0.0, 0.1};
  Rng rng(2);
  const auto instance = planted_similarity(params, rng);
  const int n = params.n();
  std::set<double> values;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) values.insert(instance.similarity(i, j));
  CHECK(values.size() == static_cast<std::size_t>(params.height) + 1);
  // Adjacent levels are exactly one separation apart.
  double previous = -1;
  for (double v : values) {
    if (previous >= 0) CHECK(v - previous == doctest::Approx(params.separation));
    previous = v;
  }
  // Within-cluster pairs take the largest value, mu.
  CHECK(*values.rbegin() == doctest::Approx(params.mu));
}

TEST_CASE("reference parameters produce the expected within-cluster mean") {
  PlantedParams params{30, 3, 0.8, 0.1, 0.15};
  Rng rng(3);
  const auto instance = planted_similarity(params, rng);
  double total = 0;
  int count = 0;
  for (int c = 0; c < 8; ++c)
    for (int i = c * 30; i < (c + 1) * 30; ++i)
      for (int j = i + 1; j < (c + 1) * 30; ++j) {
        total += instance.similarity(i, j);
        ++count;
      }
  CHECK(count == 8 * 435);
  CHECK(std::abs(total / count - 0.8) < 0.003);
  CHECK(instance.ground_truth.leaf_count() == 240);
}

TEST_CASE("same seed reproduces the matrix") {
  PlantedParams params{4, 2, 0.8, 0.1, 0.05};
  Rng a(9), b(9);
  const auto first = planted_similarity(params, a);
  const auto second = planted_similarity(params, b);
  for (int i = 0; i < params.n(); ++i)
    for (int j = 0; j < params.n(); ++j) CHECK(first.similarity(i, j) == second.similarity(i, j));
  CHECK(first.ground_truth == second.ground_truth);
}

TEST_CASE("parameter validation") {
  Rng rng(1);
  CHECK_THROWS_AS(planted_similarity(PlantedParams{0, 1, 0.8, 0.1, 0.1}, rng), std::invalid_argument);
  CHECK_THROWS_AS(planted_similarity(PlantedParams{2, -1, 0.8, 0.1, 0.1}, rng), std::invalid_argument);
  CHECK_THROWS_AS(planted_similarity(PlantedParams{2, 1, 0.8, -0.1, 0.1}, rng), std::invalid_argument);
  CHECK_THROWS_AS(planted_similarity(PlantedParams{2, 1, 0.8, 0.1, 0.0}, rng), std::invalid_argument);
}
