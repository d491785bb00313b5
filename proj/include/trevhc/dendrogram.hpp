#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "trevhc/rng.hpp"

namespace trevhc {

// Rooted binary tree on n labeled leaves, stored as an ordered merge
// sequence. Leaves carry ids 0..n-1 and the t-th merge (t = 1..n-1) creates
// cluster id n+t-1, so the root is always id 2n-2. Immutable once built.
class Dendrogram {
 public:
  // Validates the merge sequence: every id referenced exists at the time it
  // is merged, no id is merged twice, and there are exactly n-1 merges.
  // Throws std::invalid_argument otherwise.
  static Dendrogram from_merges(int n, std::vector<std::pair<int, int>> merges);

  int leaf_count() const { return n_; }
  const std::vector<std::pair<int, int>>& merges() const { return merges_; }
  int root_id() const { return n_ == 1 ? 0 : 2 * n_ - 2; }

  // Number of leaves under cluster id (1 for leaves).
  int cluster_size(int id) const { return sizes_[id]; }

  bool operator==(const Dendrogram& other) const {
    return n_ == other.n_ && merges_ == other.merges_;
  }

 private:
  Dendrogram(int n, std::vector<std::pair<int, int>> merges, std::vector<int> sizes)
      : n_(n), merges_(std::move(merges)), sizes_(std::move(sizes)) {}

  int n_ = 0;
  std::vector<std::pair<int, int>> merges_;
  std::vector<int> sizes_;  // per cluster id
};

// Dense |H(i v j)| lookup: entry (i, j) is the leaf count of the smallest
// cluster containing both. Diagonal is 1. Built in O(n^2) total.
class LcaSizeMatrix {
 public:
  explicit LcaSizeMatrix(const Dendrogram& tree);

  int n() const { return n_; }
  int size(int i, int j) const { return m_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_;
  std::vector<int> m_;
};

struct InternalNode {
  int size;
  int left_size;
  int right_size;
};

// The n-1 internal nodes in merge order, each with its size split.
std::vector<InternalNode> internal_nodes(const Dendrogram& tree);

// Canonical text form: children ordered recursively by smallest leaf label.
// Two trees induce the same family of leaf-set clusters iff their canonical
// forms are equal strings.
std::string canonical_form(const Dendrogram& tree);

// True iff the two trees induce the same set of leaf-set clusters (child
// order ignored). Throws std::invalid_argument on mismatched leaf counts.
bool is_isomorphic(const Dendrogram& a, const Dendrogram& b);

// Tree built by repeatedly merging a uniformly random pair of the current
// clusters. Not uniform over topologies for n >= 4; intended for test
// instance generation.
Dendrogram random_tree(int n, Rng& rng);

// Ground-truth hierarchy of the planted model: 2^height clusters of
// cluster_size consecutive leaves, a caterpillar inside each cluster and a
// complete binary tree over the clusters. Root sits at level 0.
Dendrogram complete_planted_tree(int cluster_size, int height);

struct RestrictedTree {
  Dendrogram tree;
  std::vector<int> old_label;  // old_label[new] = original leaf id
};

// Restriction of the tree to a nonempty leaf subset: drop the other leaves
// and contract single-child nodes. Survivors are relabeled 0..|keep|-1 in
// increasing order of their original ids.
RestrictedTree restrict_to(const Dendrogram& tree, const std::vector<int>& keep);

// Relabels leaves by perm (perm[old] = new); merge order is preserved.
Dendrogram relabel_leaves(const Dendrogram& tree, const std::vector<int>& perm);

// Merge-list text format: header "n <count>", then n-1 lines "<a> <b>".
// Lines starting with '#' are skipped; a trailing newline is required.
std::string serialize(const Dendrogram& tree);
Dendrogram parse_merge_list(const std::string& text);

void write_merge_list(const std::filesystem::path& path, const Dendrogram& tree);
Dendrogram read_merge_list(const std::filesystem::path& path);

}  // namespace trevhc
