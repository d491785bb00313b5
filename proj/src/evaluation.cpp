#include "trevhc/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace trevhc {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

Partition::Partition(std::vector<int> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) fail("partition: empty label sequence");
  const int max_label = *std::max_element(labels_.begin(), labels_.end());
  const int min_label = *std::min_element(labels_.begin(), labels_.end());
  if (min_label < 0) fail("partition: negative label");
  std::vector<char> present(max_label + 1, 0);
  for (int l : labels_) present[l] = 1;
  if (std::find(present.begin(), present.end(), 0) != present.end())
    fail("partition: cluster ids must be contiguous from 0");
  clusters_ = max_label + 1;
}

Partition cut_top(const Dendrogram& tree, int k) {
  const int n = tree.leaf_count();
  if (k < 1 || k > n) fail("cut_top: cluster count out of range");
  // Union over the first n-k merges, then compact root labels by smallest
  // leaf so output does not depend on internal id numbering.
  std::vector<int> parent(2 * n - 1);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (int t = 0; t < n - k; ++t) {
    const auto& [a, b] = tree.merges()[t];
    parent[find(a)] = n + t;
    parent[find(b)] = n + t;
  }
  std::vector<int> label_of_root(2 * n - 1, -1);
  std::vector<int> labels(n);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    const int root = find(i);
    if (label_of_root[root] < 0) label_of_root[root] = next++;
    labels[i] = label_of_root[root];
  }
  return Partition(std::move(labels));
}

double ari(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) fail("ari: partitions must cover the same objects");
  const int n = a.n();
  if (n < 2) return 1.0;
  const int ka = a.cluster_count();
  const int kb = b.cluster_count();
  std::vector<std::int64_t> contingency(static_cast<std::size_t>(ka) * kb, 0);
  std::vector<std::int64_t> row(ka, 0), col(kb, 0);
  for (int x = 0; x < n; ++x) {
    const int i = a.labels()[x];
    const int j = b.labels()[x];
    ++contingency[static_cast<std::size_t>(i) * kb + j];
    ++row[i];
    ++col[j];
  }
  const auto choose2 = [](std::int64_t v) { return v * (v - 1) / 2; };
  double index = 0;
  for (std::int64_t c : contingency) index += static_cast<double>(choose2(c));
  double sum_row = 0, sum_col = 0;
  for (std::int64_t r : row) sum_row += static_cast<double>(choose2(r));
  for (std::int64_t c : col) sum_col += static_cast<double>(choose2(c));
  const double total = static_cast<double>(choose2(n));
  const double expected = sum_row * sum_col / total;
  const double maximum = 0.5 * (sum_row + sum_col);
  if (std::abs(maximum - expected) < 1e-12) return 1.0;  // both partitions trivial
  return (index - expected) / (maximum - expected);
}

double aari(const Dendrogram& tree, const Dendrogram& truth, int levels) {
  if (tree.leaf_count() != truth.leaf_count()) fail("aari: trees must share the leaf set");
  if (levels < 1) fail("aari: levels must be >= 1");
  if ((std::int64_t{1} << levels) > tree.leaf_count())
    fail("aari: 2^levels exceeds the number of leaves");
  double total = 0;
  for (int level = 1; level <= levels; ++level) {
    const int k = 1 << level;
    total += ari(cut_top(tree, k), cut_top(truth, k));
  }
  return total / levels;
}

void write_partition(const std::filesystem::path& path, const Partition& partition) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (int label : partition.labels()) out << label << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

Partition read_partition(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<int> labels;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    labels.push_back(std::stoi(line));
  }
  return Partition(std::move(labels));
}

}  // namespace trevhc
