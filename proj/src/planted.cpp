#include "trevhc/planted.hpp"

#include <bit>
#include <stdexcept>

namespace trevhc {

void PlantedParams::validate() const {
  if (cluster_size < 1) throw std::invalid_argument("planted: cluster size must be >= 1");
  if (height < 0) throw std::invalid_argument("planted: height must be >= 0");
  if (sigma < 0) throw std::invalid_argument("planted: sigma must be >= 0");
  if (!(separation > 0)) throw std::invalid_argument("planted: separation must be > 0");
}

PlantedInstance planted_similarity(const PlantedParams& params, Rng& rng) {
  params.validate();
  const int n = params.n();
  SimilarityMatrix s(n);
  for (int i = 0; i < n; ++i) {
    const unsigned ci = static_cast<unsigned>(i / params.cluster_size);
    for (int j = i + 1; j < n; ++j) {
      const unsigned cj = static_cast<unsigned>(j / params.cluster_size);
      // Cluster LCA at level l means height - l levels of separation, which
      // equals the bit width of ci ^ cj.
      const int gap = std::bit_width(ci ^ cj);
      const double mean = params.mu - gap * params.separation;
      s.set(i, j, mean + params.sigma * rng.normal());
    }
  }
  return PlantedInstance{std::move(s), complete_planted_tree(params.cluster_size, params.height)};
}

}  // namespace trevhc
