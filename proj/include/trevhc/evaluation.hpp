#pragma once

#include <filesystem>
#include <vector>

#include "trevhc/dendrogram.hpp"

namespace trevhc {

// Flat clustering as leaf -> cluster-id labels. Ids are compact
// (0..cluster_count-1) and every cluster is nonempty.
class Partition {
 public:
  explicit Partition(std::vector<int> labels);

  int n() const { return static_cast<int>(labels_.size()); }
  int cluster_count() const { return clusters_; }
  const std::vector<int>& labels() const { return labels_; }

 private:
  std::vector<int> labels_;
  int clusters_;
};

// Partition obtained by undoing the last k-1 merges (equivalently, stopping
// agglomeration at k clusters). Labels are compacted in order of the
// smallest leaf of each cluster.
Partition cut_top(const Dendrogram& tree, int k);

// Hubert-Arabie Adjusted Rand Index in [-1, 1]; 1 iff identical partitions.
// The degenerate zero-denominator case (both partitions trivial) is 1.
double ari(const Partition& a, const Partition& b);

// Mean ARI of the 2^l-cluster cuts for l = 1..levels.
double aari(const Dendrogram& tree, const Dendrogram& truth, int levels);

// One label per line.
void write_partition(const std::filesystem::path& path, const Partition& partition);
Partition read_partition(const std::filesystem::path& path);

}  // namespace trevhc
