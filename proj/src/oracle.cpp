#include "trevhc/oracle.hpp"

#include <array>
#include <stdexcept>

#include "trevhc/objective.hpp"

namespace trevhc {

std::uint64_t count_trees(int n) {
  if (n <= 1) return 1;
  if (n > 21) throw std::overflow_error("count_trees: (2n-3)!! exceeds 64 bits");
  std::uint64_t count = 1;
  for (int odd = 3; odd <= 2 * n - 3; odd += 2) count *= static_cast<std::uint64_t>(odd);
  return count;
}

namespace {

// Mutable rooted tree used during enumeration. Nodes 0..n-1 are leaves;
// internal nodes are appended. children[v] is meaningful for internals only.
struct GrowingTree {
  int n;
  int root = -1;
  std::vector<std::array<int, 2>> children;  // indexed by node id
  std::vector<int> parent;

  explicit GrowingTree(int leaves) : n(leaves) {
    children.assign(2 * leaves - 1, {-1, -1});
    parent.assign(2 * leaves - 1, -1);
  }

  Dendrogram to_dendrogram() const {
    std::vector<std::pair<int, int>> merges;
    merges.reserve(n - 1);
    emit(root, merges);
    return Dendrogram::from_merges(n, std::move(merges));
  }

 private:
  int emit(int node, std::vector<std::pair<int, int>>& merges) const {
    if (node < n) return node;
    const int a = emit(children[node][0], merges);
    const int b = emit(children[node][1], merges);
    merges.emplace_back(a, b);
    return n + static_cast<int>(merges.size()) - 1;
  }
};

void grow(GrowingTree& tree, int next_leaf, std::vector<int>& nodes,
          const std::function<void(const Dendrogram&)>& visit) {
  if (next_leaf == tree.n) {
    visit(tree.to_dendrogram());
    return;
  }
  const int internal = tree.n + next_leaf - 1;  // one fresh internal id per insertion depth
  const std::size_t node_count = nodes.size();
  for (std::size_t pos = 0; pos < node_count; ++pos) {
    const int sibling = nodes[pos];
    const int up = tree.parent[sibling];
    // Splice: internal replaces sibling under its parent and adopts
    // {sibling, next_leaf}.
    tree.children[internal] = {sibling, next_leaf};
    tree.parent[sibling] = internal;
    tree.parent[next_leaf] = internal;
    tree.parent[internal] = up;
    if (up >= 0) {
      auto& up_children = tree.children[up];
      up_children[up_children[0] == sibling ? 0 : 1] = internal;
    } else {
      tree.root = internal;
    }
    nodes.push_back(next_leaf);
    nodes.push_back(internal);

    grow(tree, next_leaf + 1, nodes, visit);

    nodes.pop_back();
    nodes.pop_back();
    if (up >= 0) {
      auto& up_children = tree.children[up];
      up_children[up_children[0] == internal ? 0 : 1] = sibling;
    } else {
      tree.root = sibling;
    }
    tree.parent[sibling] = up;
  }
}

}  // namespace

void enumerate_trees(int n, const std::function<void(const Dendrogram&)>& visit, int cap) {
  if (n < 1) throw std::invalid_argument("enumerate_trees: n must be >= 1");
  if (n > cap)
    throw std::invalid_argument("enumerate_trees: n=" + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap) + "; raise the cap explicitly if intended");
  if (n == 1) {
    visit(Dendrogram::from_merges(1, {}));
    return;
  }
  GrowingTree tree(n);
  const int first_internal = n;
  tree.children[first_internal] = {0, 1};
  tree.parent[0] = first_internal;
  tree.parent[1] = first_internal;
  tree.root = first_internal;
  std::vector<int> nodes = {0, 1, first_internal};
  grow(tree, 2, nodes, visit);
}

namespace {

BruteForceResult brute_force_max(const TripletSet& triplets, int n, int cap, bool use_consistency) {
  if (n < triplets.n()) throw std::invalid_argument("brute force: n smaller than the triplet set's");
  std::optional<Dendrogram> best;
  std::int64_t best_value = 0;
  int max_count = 0;
  enumerate_trees(n, [&](const Dendrogram& tree) {
    const LcaSizeMatrix lca(tree);
    const std::int64_t value = use_consistency ? consistency_count(lca, triplets.items())
                                               : trev(lca, triplets.items());
    if (!best || value > best_value) {
      best = tree;
      best_value = value;
      max_count = 1;
    } else if (value == best_value) {
      ++max_count;
    }
  }, cap);
  return BruteForceResult{std::move(*best), best_value, max_count == 1};
}

}  // namespace

BruteForceResult brute_force_max_trev(const TripletSet& triplets, int n, int cap) {
  return brute_force_max(triplets, n, cap, false);
}

BruteForceResult brute_force_max_consistency(const TripletSet& triplets, int n, int cap) {
  return brute_force_max(triplets, n, cap, true);
}

}  // namespace trevhc
