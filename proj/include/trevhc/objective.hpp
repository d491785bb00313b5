#pragma once

#include <cstdint>
#include <span>

#include "trevhc/comparisons.hpp"
#include "trevhc/dendrogram.hpp"
#include "trevhc/similarity.hpp"

namespace trevhc {

// Triplet comparison revenue: sum over observed (i,j,k) of
// |H(i v k)| - |H(i v j)|. Linear in the observations (duplicates count).
std::int64_t trev(const LcaSizeMatrix& lca, std::span<const Triplet> triplets);
std::int64_t trev(const Dendrogram& tree, const TripletSet& triplets);

// Quadruplet comparison revenue: sum of |H(k v l)| - |H(i v j)|.
std::int64_t qrev(const LcaSizeMatrix& lca, std::span<const Quadruplet> quadruplets);
std::int64_t qrev(const Dendrogram& tree, const QuadrupletSet& quadruplets);

// Dasgupta cost sum_{i<j} s_ij |H(i v j)| and revenue n * sum s - cost.
template <typename Scalar>
Scalar dcost(const LcaSizeMatrix& lca, const BasicSimilarityMatrix<Scalar>& s);
template <typename Scalar>
Scalar dcost(const Dendrogram& tree, const BasicSimilarityMatrix<Scalar>& s);
template <typename Scalar>
Scalar drev(const LcaSizeMatrix& lca, const BasicSimilarityMatrix<Scalar>& s);
template <typename Scalar>
Scalar drev(const Dendrogram& tree, const BasicSimilarityMatrix<Scalar>& s);

// Number of observed triplets the tree satisfies strictly:
// |H(i v k)| > |H(i v j)|.
std::int64_t consistency_count(const LcaSizeMatrix& lca, std::span<const Triplet> triplets);
std::int64_t consistency_count(const Dendrogram& tree, const TripletSet& triplets);
std::int64_t consistency_count(const LcaSizeMatrix& lca, std::span<const Quadruplet> quadruplets);

// trev(H0, triplets_from_tree(H0)) without forming the triplet set:
// sum over internal nodes of |N1| |N2| |N| (3|N| - 2n - 2).
std::int64_t latent_trev_closed_form(const Dendrogram& latent);

}  // namespace trevhc
