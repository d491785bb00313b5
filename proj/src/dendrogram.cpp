#include "trevhc/dendrogram.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace trevhc {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

Dendrogram Dendrogram::from_merges(int n, std::vector<std::pair<int, int>> merges) {
  if (n < 1) fail("dendrogram: leaf count must be >= 1");
  if (static_cast<int>(merges.size()) != n - 1)
    fail("dendrogram: expected " + std::to_string(n - 1) + " merges, got " +
         std::to_string(merges.size()));

  const int total = 2 * n - 1;
  std::vector<int> sizes(total, 0);
  std::vector<char> merged(total, 0);
  for (int i = 0; i < n; ++i) sizes[i] = 1;

  for (int t = 0; t < n - 1; ++t) {
    const auto [a, b] = merges[t];
    const int created = n + t;
    for (int id : {a, b}) {
      if (id < 0 || id >= created) fail("dendrogram: unknown id " + std::to_string(id) + " in merge " + std::to_string(t));
      if (merged[id]) fail("dendrogram: id " + std::to_string(id) + " merged twice");
    }
    if (a == b) fail("dendrogram: id " + std::to_string(a) + " merged with itself");
    merged[a] = merged[b] = 1;
    sizes[created] = sizes[a] + sizes[b];
  }
  return Dendrogram(n, std::move(merges), std::move(sizes));
}

LcaSizeMatrix::LcaSizeMatrix(const Dendrogram& tree) : n_(tree.leaf_count()) {
  m_.assign(static_cast<std::size_t>(n_) * n_, 1);
  // Leaf lists per live cluster; a merge of A and B sets |A|+|B| for every
  // cross pair, which sums to C(n,2) assignments over the whole run.
  std::vector<std::vector<int>> members(2 * n_ - 1);
  for (int i = 0; i < n_; ++i) members[i] = {i};
  int next = n_;
  for (const auto& [a, b] : tree.merges()) {
    auto& la = members[a];
    auto& lb = members[b];
    const int sz = static_cast<int>(la.size() + lb.size());
    for (int i : la)
      for (int j : lb) {
        m_[static_cast<std::size_t>(i) * n_ + j] = sz;
        m_[static_cast<std::size_t>(j) * n_ + i] = sz;
      }
    members[next] = std::move(la);
    auto& merged = members[next];
    merged.insert(merged.end(), lb.begin(), lb.end());
    lb.clear();
    lb.shrink_to_fit();
    ++next;
  }
}

std::vector<InternalNode> internal_nodes(const Dendrogram& tree) {
  std::vector<InternalNode> nodes;
  nodes.reserve(tree.merges().size());
  for (const auto& [a, b] : tree.merges()) {
    const int la = tree.cluster_size(a);
    const int lb = tree.cluster_size(b);
    nodes.push_back({la + lb, la, lb});
  }
  return nodes;
}

namespace {

void append_canonical(const Dendrogram& tree, const std::vector<std::array<int, 2>>& children,
                      const std::vector<int>& min_leaf, int id, std::string& out) {
  const int n = tree.leaf_count();
  if (id < n) {
    out += std::to_string(id);
    return;
  }
  auto [a, b] = children[id - n];
  if (min_leaf[a] > min_leaf[b]) std::swap(a, b);
  out += '(';
  append_canonical(tree, children, min_leaf, a, out);
  out += ',';
  append_canonical(tree, children, min_leaf, b, out);
  out += ')';
}

}  // namespace

std::string canonical_form(const Dendrogram& tree) {
  const int n = tree.leaf_count();
  std::vector<std::array<int, 2>> children;
  children.reserve(n - 1);
  std::vector<int> min_leaf(2 * n - 1);
  std::iota(min_leaf.begin(), min_leaf.begin() + n, 0);
  int next = n;
  for (const auto& [a, b] : tree.merges()) {
    children.push_back({a, b});
    min_leaf[next++] = std::min(min_leaf[a], min_leaf[b]);
  }
  std::string out;
  append_canonical(tree, children, min_leaf, tree.root_id(), out);
  return out;
}

bool is_isomorphic(const Dendrogram& a, const Dendrogram& b) {
  if (a.leaf_count() != b.leaf_count()) fail("is_isomorphic: mismatched leaf counts");
  return canonical_form(a) == canonical_form(b);
}

Dendrogram random_tree(int n, Rng& rng) {
  if (n < 1) fail("random_tree: n must be >= 1");
  std::vector<int> active(n);
  std::iota(active.begin(), active.end(), 0);
  std::vector<std::pair<int, int>> merges;
  merges.reserve(n - 1);
  int next = n;
  while (active.size() > 1) {
    const std::size_t ai = rng.below(active.size());
    std::size_t bi = rng.below(active.size() - 1);
    if (bi >= ai) ++bi;
    merges.emplace_back(active[ai], active[bi]);
    // Remove the higher position first so the lower one stays valid.
    const std::size_t hi = std::max(ai, bi);
    const std::size_t lo = std::min(ai, bi);
    active.erase(active.begin() + hi);
    active.erase(active.begin() + lo);
    active.push_back(next++);
  }
  return Dendrogram::from_merges(n, std::move(merges));
}

Dendrogram complete_planted_tree(int cluster_size, int height) {
  if (cluster_size < 1) fail("complete_planted_tree: cluster size must be >= 1");
  if (height < 0) fail("complete_planted_tree: height must be >= 0");
  const int clusters = 1 << height;
  const int n = cluster_size * clusters;
  std::vector<std::pair<int, int>> merges;
  merges.reserve(n - 1);
  int next = n;

  // Caterpillar inside each ground cluster; record each cluster's top id.
  std::vector<int> top(clusters);
  for (int c = 0; c < clusters; ++c) {
    const int base = c * cluster_size;
    int head = base;
    for (int x = 1; x < cluster_size; ++x) {
      merges.emplace_back(head, base + x);
      head = next++;
    }
    top[c] = head;
  }
  // Complete binary tree over the clusters, bottom level first.
  for (int level_width = clusters; level_width > 1; level_width /= 2) {
    for (int c = 0; c + 1 < level_width; c += 2) {
      merges.emplace_back(top[c], top[c + 1]);
      top[c / 2] = next++;
    }
  }
  return Dendrogram::from_merges(n, std::move(merges));
}

RestrictedTree restrict_to(const Dendrogram& tree, const std::vector<int>& keep) {
  if (keep.empty()) fail("restrict_to: empty leaf subset");
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() < 0 || sorted.back() >= tree.leaf_count())
    fail("restrict_to: leaf id out of range");

  const int m = static_cast<int>(sorted.size());
  // rep[id] = surviving cluster in the restricted tree, or -1 if none of the
  // cluster's leaves survive. Single-child nodes contract by passing the
  // representative through.
  std::vector<int> rep(2 * tree.leaf_count() - 1, -1);
  for (int x = 0; x < m; ++x) rep[sorted[x]] = x;

  std::vector<std::pair<int, int>> merges;
  merges.reserve(m - 1);
  int next_id = m;
  int cursor = tree.leaf_count();
  for (const auto& [a, b] : tree.merges()) {
    const int ra = rep[a];
    const int rb = rep[b];
    if (ra >= 0 && rb >= 0) {
      merges.emplace_back(ra, rb);
      rep[cursor] = next_id++;
    } else if (ra >= 0 || rb >= 0) {
      rep[cursor] = std::max(ra, rb);
    }
    ++cursor;
  }
  return RestrictedTree{Dendrogram::from_merges(m, std::move(merges)), std::move(sorted)};
}

Dendrogram relabel_leaves(const Dendrogram& tree, const std::vector<int>& perm) {
  const int n = tree.leaf_count();
  if (static_cast<int>(perm.size()) != n) fail("relabel_leaves: permutation size mismatch");
  std::vector<char> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) fail("relabel_leaves: not a permutation");
    seen[p] = 1;
  }
  std::vector<std::pair<int, int>> merges = tree.merges();
  for (auto& [a, b] : merges) {
    if (a < n) a = perm[a];
    if (b < n) b = perm[b];
  }
  return Dendrogram::from_merges(n, std::move(merges));
}

std::string serialize(const Dendrogram& tree) {
  std::string out = "n " + std::to_string(tree.leaf_count()) + "\n";
  for (const auto& [a, b] : tree.merges())
    out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

namespace {

int parse_int(const std::string& token, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    fail(std::string("merge list: bad ") + what + " '" + token + "'");
  return value;
}

}  // namespace

Dendrogram parse_merge_list(const std::string& text) {
  if (text.empty() || text.back() != '\n') fail("merge list: missing trailing newline");
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int n = 0;
  std::vector<std::pair<int, int>> merges;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!have_header) {
      if (!(fields >> a >> b) || a != "n" || (fields >> extra))
        fail("merge list: malformed header '" + line + "'");
      n = parse_int(b, "leaf count");
      if (n < 1) fail("merge list: leaf count must be >= 1");
      have_header = true;
      continue;
    }
    if (!(fields >> a >> b) || (fields >> extra)) fail("merge list: malformed merge line '" + line + "'");
    merges.emplace_back(parse_int(a, "id"), parse_int(b, "id"));
  }
  if (!have_header) fail("merge list: missing header");
  if (static_cast<int>(merges.size()) != n - 1)
    fail("merge list: expected " + std::to_string(n - 1) + " merge lines, got " +
         std::to_string(merges.size()));
  return Dendrogram::from_merges(n, std::move(merges));
}

void write_merge_list(const std::filesystem::path& path, const Dendrogram& tree) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << serialize(tree);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

Dendrogram read_merge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_merge_list(buffer.str());
}

}  // namespace trevhc
