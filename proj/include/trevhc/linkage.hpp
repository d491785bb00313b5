#pragma once

#include "trevhc/dendrogram.hpp"
#include "trevhc/similarity.hpp"

namespace trevhc {

// Average-linkage agglomeration on similarities: repeatedly merges the pair
// of clusters with the largest average inter-cluster similarity, updating by
// the size-weighted rule s(A+B, C) = (|A| s(A,C) + |B| s(B,C)) / (|A|+|B|).
// Among tied argmax pairs, the lexicographically smallest
// (min cluster id, max cluster id) wins, making the output deterministic.
template <typename Scalar>
Dendrogram average_linkage(const BasicSimilarityMatrix<Scalar>& s);

}  // namespace trevhc
