#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <unordered_set>
#include <vector>

#include "trevhc/dendrogram.hpp"
#include "trevhc/rng.hpp"
#include "trevhc/similarity.hpp"

namespace trevhc {

// "i is more similar to j than to k", i.e. s_ij > s_ik.
struct Triplet {
  int i, j, k;
  bool operator==(const Triplet&) const = default;
  Triplet flipped() const { return {i, k, j}; }
};

// "pair (i,j) is more similar than pair (k,l)", with i < j, k < l,
// (i,j) != (k,l).
struct Quadruplet {
  int i, j, k, l;
  bool operator==(const Quadruplet&) const = default;
  Quadruplet flipped() const { return {k, l, i, j}; }
};

// De-duplicated triplet collection over objects 0..n-1 with O(1) membership.
// Insertion order is preserved, which keeps downstream sampling and file
// output deterministic.
class TripletSet {
 public:
  explicit TripletSet(int n);

  int n() const { return n_; }
  std::size_t size() const { return items_.size(); }
  std::span<const Triplet> items() const { return items_; }

  // Validates range and distinctness; returns false on an exact duplicate.
  bool insert(Triplet t);
  bool contains(Triplet t) const;
  void reserve(std::size_t count) { items_.reserve(count); keys_.reserve(count); }

 private:
  std::uint64_t key(Triplet t) const;
  int n_;
  std::vector<Triplet> items_;
  std::unordered_set<std::uint64_t> keys_;
};

class QuadrupletSet {
 public:
  explicit QuadrupletSet(int n);

  int n() const { return n_; }
  std::size_t size() const { return items_.size(); }
  std::span<const Quadruplet> items() const { return items_; }

  bool insert(Quadruplet q);
  bool contains(Quadruplet q) const;
  void reserve(std::size_t count) { items_.reserve(count); keys_.reserve(count); }

 private:
  std::uint64_t key(Quadruplet q) const;
  int n_;
  std::vector<Quadruplet> items_;
  std::unordered_set<std::uint64_t> keys_;
};

struct SamplingParams {
  double p = 1.0;         // per-pair inclusion probability, in (0, 1]
  double alpha = 1.0;     // confidence exponent, > 0
  double epsilon = 0.25;  // target accuracy, in (0, 1/2)
  void validate() const;
};

struct NoiseParams {
  // Per-triplet flip probability. The recovery theory assumes [0, 1/2); the
  // operation itself is defined for any probability in [0, 1].
  double flip_prob = 0.0;
  void validate() const;
};

// Complete noiseless triplet set of a tree: for every triple with a strict
// closest pair under H, both orientations are emitted. Size is exactly
// n(n-1)(n-2)/3; empty for n < 3.
TripletSet triplets_from_tree(const Dendrogram& tree);

// Materialized T_all / Q_all of a similarity matrix; ties produce no
// comparison. Guarded against sizes that should never be materialized.
template <typename Scalar>
TripletSet triplets_from_similarity(const BasicSimilarityMatrix<Scalar>& s);
template <typename Scalar>
QuadrupletSet quadruplets_from_similarity(const BasicSimilarityMatrix<Scalar>& s);

// Pair-level Bernoulli sampling: each unordered pair {(i,j,k), (j,i,k)} is
// kept jointly with probability params.p. The input must be closed under
// that pairing.
TripletSet sample_pairs_bernoulli(const TripletSet& t0, const SamplingParams& params, Rng& rng);

// Uniform sample of m distinct tie-free comparisons from the similarity's
// comparison space, via combinatorial unranking; the space is never
// materialized. Throws if m exceeds the (tie-free) space.
template <typename Scalar>
TripletSet sample_uniform_triplets(const BasicSimilarityMatrix<Scalar>& s, std::int64_t m, Rng& rng);
template <typename Scalar>
QuadrupletSet sample_uniform_quadruplets(const BasicSimilarityMatrix<Scalar>& s, std::int64_t m, Rng& rng);

// Independently replaces each triplet (i,j,k) by (i,k,j) with probability
// flip_prob (quadruplets swap their pair order).
TripletSet flip_noise(const TripletSet& t, const NoiseParams& params, Rng& rng);
QuadrupletSet flip_noise(const QuadrupletSet& q, const NoiseParams& params, Rng& rng);

// Crowd-sourced query conversions into standard triplets.
struct CentralAnswer {
  int i, j, k;
  int central;
};
struct OddOutAnswer {
  int i, j, k;
  int odd;
};
struct Rank2of8Answer {
  int ref;
  std::array<int, 7> candidates;
  int first, second;  // the two candidates ranked most similar, in order
};

TripletSet convert_central(std::span<const CentralAnswer> answers, int n);
TripletSet convert_odd_out(std::span<const OddOutAnswer> answers, int n);
TripletSet convert_rank2of8(std::span<const Rank2of8Answer> answers, int n);

// Triplets entirely inside the subset, relabeled consistently with
// restrict_to (survivors take ranks 0..|keep|-1 in sorted order).
TripletSet restrict_triplets(const TripletSet& t, const std::vector<int>& keep);

// Text formats: one "i j k" (or "i j k l") per line, '#' comments.
// Vector reads preserve duplicates and order; set builders de-duplicate.
std::vector<Triplet> read_triplets(const std::filesystem::path& path);
std::vector<Quadruplet> read_quadruplets(const std::filesystem::path& path);
void write_triplets(const std::filesystem::path& path, std::span<const Triplet> triplets);
void write_quadruplets(const std::filesystem::path& path, std::span<const Quadruplet> quadruplets);

TripletSet triplet_set_from(std::span<const Triplet> triplets, int n);
QuadrupletSet quadruplet_set_from(std::span<const Quadruplet> quadruplets, int n);
int infer_object_count(std::span<const Triplet> triplets);
int infer_object_count(std::span<const Quadruplet> quadruplets);

// Converter CSV: the header's first cell names the query type
// (central | oddout | rank2of8); each row holds one answer.
//   central / oddout:  i,j,k,answer
//   rank2of8:          ref,c1,...,c7,first,second
TripletSet convert_query_csv(const std::filesystem::path& path, int n = -1);

}  // namespace trevhc
