#pragma once

#include "trevhc/dendrogram.hpp"
#include "trevhc/rng.hpp"
#include "trevhc/similarity.hpp"

namespace trevhc {

// Planted-model configuration: 2^height ground clusters of cluster_size
// objects. Within-cluster pairs have mean mu; pairs whose cluster LCA sits
// at level l (root = 0) have mean mu - (height - l) * separation. The
// signal-to-noise ratio is separation / sigma.
struct PlantedParams {
  int cluster_size = 30;
  int height = 3;
  double mu = 0.8;
  double sigma = 0.1;
  double separation = 0.15;

  int n() const { return cluster_size << height; }
  void validate() const;
};

struct PlantedInstance {
  SimilarityMatrix similarity;
  Dendrogram ground_truth;
};

// Draws each pair once (i < j) and mirrors, so the matrix is symmetric by
// construction; the diagonal stays 0.
PlantedInstance planted_similarity(const PlantedParams& params, Rng& rng);

}  // namespace trevhc
