#include "trevhc/objective.hpp"

#include <stdexcept>

namespace trevhc {

namespace {

void check_magnitude(std::size_t count, int n) {
  // Each term is bounded by n, so the sum stays within int64 as long as
  // |comparisons| * n does. Unreachable at desk scale.
  if (n > 0 && count > static_cast<std::size_t>(INT64_MAX / n))
    throw std::overflow_error("revenue: comparison set too large for 64-bit accumulation");
}

}  // namespace

std::int64_t trev(const LcaSizeMatrix& lca, std::span<const Triplet> triplets) {
  check_magnitude(triplets.size(), lca.n());
  std::int64_t total = 0;
  for (const Triplet& t : triplets) total += lca.size(t.i, t.k) - lca.size(t.i, t.j);
  return total;
}

std::int64_t trev(const Dendrogram& tree, const TripletSet& triplets) {
  if (triplets.n() > tree.leaf_count())
    throw std::invalid_argument("trev: triplet indices exceed the tree's leaves");
  return trev(LcaSizeMatrix(tree), triplets.items());
}

std::int64_t qrev(const LcaSizeMatrix& lca, std::span<const Quadruplet> quadruplets) {
  check_magnitude(quadruplets.size(), lca.n());
  std::int64_t total = 0;
  for (const Quadruplet& q : quadruplets) total += lca.size(q.k, q.l) - lca.size(q.i, q.j);
  return total;
}

std::int64_t qrev(const Dendrogram& tree, const QuadrupletSet& quadruplets) {
  if (quadruplets.n() > tree.leaf_count())
    throw std::invalid_argument("qrev: quadruplet indices exceed the tree's leaves");
  return qrev(LcaSizeMatrix(tree), quadruplets.items());
}

template <typename Scalar>
Scalar dcost(const LcaSizeMatrix& lca, const BasicSimilarityMatrix<Scalar>& s) {
  if (lca.n() != s.n()) throw std::invalid_argument("dcost: size mismatch");
  Scalar total = 0;
  for (int i = 0; i < s.n(); ++i)
    for (int j = i + 1; j < s.n(); ++j) total += s(i, j) * static_cast<Scalar>(lca.size(i, j));
  return total;
}

template <typename Scalar>
Scalar dcost(const Dendrogram& tree, const BasicSimilarityMatrix<Scalar>& s) {
  return dcost(LcaSizeMatrix(tree), s);
}

template <typename Scalar>
Scalar drev(const LcaSizeMatrix& lca, const BasicSimilarityMatrix<Scalar>& s) {
  Scalar sum = 0;
  for (int i = 0; i < s.n(); ++i)
    for (int j = i + 1; j < s.n(); ++j) sum += s(i, j);
  return static_cast<Scalar>(s.n()) * sum - dcost(lca, s);
}

template <typename Scalar>
Scalar drev(const Dendrogram& tree, const BasicSimilarityMatrix<Scalar>& s) {
  return drev(LcaSizeMatrix(tree), s);
}

template double dcost<double>(const LcaSizeMatrix&, const SimilarityMatrix&);
template double dcost<double>(const Dendrogram&, const SimilarityMatrix&);
template double drev<double>(const LcaSizeMatrix&, const SimilarityMatrix&);
template double drev<double>(const Dendrogram&, const SimilarityMatrix&);
template std::int64_t dcost<std::int64_t>(const LcaSizeMatrix&, const IntSimilarityMatrix&);
template std::int64_t dcost<std::int64_t>(const Dendrogram&, const IntSimilarityMatrix&);
template std::int64_t drev<std::int64_t>(const LcaSizeMatrix&, const IntSimilarityMatrix&);
template std::int64_t drev<std::int64_t>(const Dendrogram&, const IntSimilarityMatrix&);

std::int64_t consistency_count(const LcaSizeMatrix& lca, std::span<const Triplet> triplets) {
  std::int64_t count = 0;
  for (const Triplet& t : triplets) count += lca.size(t.i, t.k) > lca.size(t.i, t.j) ? 1 : 0;
  return count;
}

std::int64_t consistency_count(const Dendrogram& tree, const TripletSet& triplets) {
  if (triplets.n() > tree.leaf_count())
    throw std::invalid_argument("consistency_count: triplet indices exceed the tree's leaves");
  return consistency_count(LcaSizeMatrix(tree), triplets.items());
}

std::int64_t consistency_count(const LcaSizeMatrix& lca, std::span<const Quadruplet> quadruplets) {
  std::int64_t count = 0;
  for (const Quadruplet& q : quadruplets) count += lca.size(q.k, q.l) > lca.size(q.i, q.j) ? 1 : 0;
  return count;
}

std::int64_t latent_trev_closed_form(const Dendrogram& latent) {
  const std::int64_t n = latent.leaf_count();
  std::int64_t total = 0;
  for (const InternalNode& node : internal_nodes(latent)) {
    const std::int64_t size = node.size;
    total += static_cast<std::int64_t>(node.left_size) * node.right_size * size * (3 * size - 2 * n - 2);
  }
  return total;
}

}  // namespace trevhc
