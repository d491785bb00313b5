#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "trevhc/dendrogram.hpp"

namespace trevhc {

struct Triplet;
struct Quadruplet;
class TripletSet;
class QuadrupletSet;

// Symmetric n x n similarity with a fixed zero diagonal. Instantiated with
// std::int64_t for the exact additive similarities and with double for
// cosine / planted similarities.
template <typename Scalar>
class BasicSimilarityMatrix {
 public:
  explicit BasicSimilarityMatrix(int n);

  int n() const { return n_; }
  Scalar operator()(int i, int j) const { return values_[static_cast<std::size_t>(i) * n_ + j]; }

  // Writes both (i, j) and (j, i); the diagonal cannot be set.
  void set(int i, int j, Scalar value);
  void add(int i, int j, Scalar delta);

  std::span<const Scalar> raw() const { return values_; }

 private:
  int n_;
  std::vector<Scalar> values_;
};

using SimilarityMatrix = BasicSimilarityMatrix<double>;
using IntSimilarityMatrix = BasicSimilarityMatrix<std::int64_t>;

SimilarityMatrix to_double(const IntSimilarityMatrix& s);

// Additive similarity from triplets: each observed (i,j,k) adds +1 to pair
// (i,j) and -1 to pair (i,k). Linear in the observations, exact integers.
IntSimilarityMatrix adds3(std::span<const Triplet> triplets, int n);
IntSimilarityMatrix adds3(const TripletSet& triplets);

// Additive similarity from quadruplets: (i,j,k,l) adds +1 to (i,j), -1 to (k,l).
IntSimilarityMatrix adds4(std::span<const Quadruplet> quadruplets, int n);
IntSimilarityMatrix adds4(const QuadrupletSet& quadruplets);

// Closed form of adds3 on the complete triplet set of a latent tree:
// s[i][j] = 2n + 2 - 3 |H0(i v j)|.
IntSimilarityMatrix latent_adds3(const Dendrogram& latent);

// Row-wise cosine similarity of an embedding; throws on zero-norm rows.
SimilarityMatrix cosine_similarity(const std::vector<std::vector<double>>& rows);

// n x n CSV, comma separated. Reads verify symmetry (exact for integers,
// 1e-9 for reals) and a zero diagonal.
void write_similarity_csv(const std::filesystem::path& path, const SimilarityMatrix& s);
void write_similarity_csv(const std::filesystem::path& path, const IntSimilarityMatrix& s);
SimilarityMatrix read_similarity_csv(const std::filesystem::path& path);
IntSimilarityMatrix read_int_similarity_csv(const std::filesystem::path& path);

// One vector per row, comma separated.
std::vector<std::vector<double>> read_embedding_csv(const std::filesystem::path& path);

}  // namespace trevhc
