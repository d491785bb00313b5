#include "trevhc/comparisons.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace trevhc {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

constexpr int kMaxTripletObjects = 1 << 20;   // key packs three 21-bit ids
constexpr int kMaxQuadrupletObjects = 1 << 16;  // key packs two 32-bit pair ids
constexpr std::int64_t kMaxMaterialized = 20'000'000;

// Pairs (a, b) with 0 <= a < b < M in lexicographic order.
std::uint64_t pair_count(std::uint64_t m) { return m * (m - 1) / 2; }

std::uint64_t pair_offset(std::uint64_t m, std::uint64_t a) { return a * m - a * (a + 1) / 2; }

void unrank_pair(std::uint64_t m, std::uint64_t rank, std::uint64_t& a, std::uint64_t& b) {
  const long double mf = static_cast<long double>(m);
  long double disc = (mf - 0.5L) * (mf - 0.5L) - 2.0L * static_cast<long double>(rank);
  if (disc < 0) disc = 0;
  long double raw = mf - 0.5L - std::sqrt(static_cast<double>(disc));
  if (raw < 0) raw = 0;
  std::uint64_t est = static_cast<std::uint64_t>(raw);
  if (est > m - 2) est = m - 2;
  while (est > 0 && pair_offset(m, est) > rank) --est;
  while (est + 1 <= m - 2 && pair_offset(m, est + 1) <= rank) ++est;
  a = est;
  b = rank - pair_offset(m, est) + est + 1;
}

}  // namespace

TripletSet::TripletSet(int n) : n_(n) {
  if (n < 1) fail("triplet set: n must be >= 1");
  if (n > kMaxTripletObjects) fail("triplet set: n too large for packed keys");
}

std::uint64_t TripletSet::key(Triplet t) const {
  return (static_cast<std::uint64_t>(t.i) << 42) | (static_cast<std::uint64_t>(t.j) << 21) |
         static_cast<std::uint64_t>(t.k);
}

bool TripletSet::insert(Triplet t) {
  for (int idx : {t.i, t.j, t.k})
    if (idx < 0 || idx >= n_) fail("triplet: index " + std::to_string(idx) + " out of range");
  if (t.i == t.j || t.i == t.k || t.j == t.k) fail("triplet: indices must be distinct");
  if (!keys_.insert(key(t)).second) return false;
  items_.push_back(t);
  return true;
}

bool TripletSet::contains(Triplet t) const { return keys_.count(key(t)) > 0; }

QuadrupletSet::QuadrupletSet(int n) : n_(n) {
  if (n < 1) fail("quadruplet set: n must be >= 1");
  if (n > kMaxQuadrupletObjects) fail("quadruplet set: n too large for packed keys");
}

std::uint64_t QuadrupletSet::key(Quadruplet q) const {
  const std::uint64_t first = static_cast<std::uint64_t>(q.i) * n_ + q.j;
  const std::uint64_t second = static_cast<std::uint64_t>(q.k) * n_ + q.l;
  return (first << 32) | second;
}

bool QuadrupletSet::insert(Quadruplet q) {
  for (int idx : {q.i, q.j, q.k, q.l})
    if (idx < 0 || idx >= n_) fail("quadruplet: index " + std::to_string(idx) + " out of range");
  if (q.i >= q.j || q.k >= q.l) fail("quadruplet: pairs must satisfy i < j and k < l");
  if (q.i == q.k && q.j == q.l) fail("quadruplet: the two pairs must differ");
  if (!keys_.insert(key(q)).second) return false;
  items_.push_back(q);
  return true;
}

bool QuadrupletSet::contains(Quadruplet q) const { return keys_.count(key(q)) > 0; }

void SamplingParams::validate() const {
  if (p < 0.0 || p > 1.0) fail("sampling: p must be in [0, 1]");
  if (!(alpha > 0.0)) fail("sampling: alpha must be > 0");
  if (!(epsilon > 0.0) || !(epsilon < 0.5)) fail("sampling: epsilon must be in (0, 1/2)");
}

void NoiseParams::validate() const {
  if (flip_prob < 0.0 || flip_prob > 1.0) fail("noise: flip_prob must be in [0, 1]");
}

TripletSet triplets_from_tree(const Dendrogram& tree) {
  const int n = tree.leaf_count();
  TripletSet out(n);
  if (n < 3) return out;
  const LcaSizeMatrix lca(tree);
  out.reserve(static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 3);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int sij = lca.size(i, j);
      for (int k = j + 1; k < n; ++k) {
        const int sik = lca.size(i, k);
        const int sjk = lca.size(j, k);
        // Exactly one pair of a triple is merged strictly first in a binary
        // tree; emit both orientations for it.
        if (sij < sik && sij < sjk) {
          out.insert({i, j, k});
          out.insert({j, i, k});
        } else if (sik < sij && sik < sjk) {
          out.insert({i, k, j});
          out.insert({k, i, j});
        } else {
          out.insert({j, k, i});
          out.insert({k, j, i});
        }
      }
    }
  return out;
}

template <typename Scalar>
TripletSet triplets_from_similarity(const BasicSimilarityMatrix<Scalar>& s) {
  const int n = s.n();
  const std::int64_t space = n >= 3 ? 3 * (static_cast<std::int64_t>(n) * (n - 1) * (n - 2) / 6) : 0;
  if (space > kMaxMaterialized)
    fail("triplets_from_similarity: space too large to materialize; use sample_uniform_triplets");
  TripletSet out(n);
  out.reserve(static_cast<std::size_t>(space));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = j + 1; k < n; ++k) {
        if (k == i) continue;
        const Scalar sij = s(i, j);
        const Scalar sik = s(i, k);
        if (sij > sik)
          out.insert({i, j, k});
        else if (sik > sij)
          out.insert({i, k, j});
      }
    }
  return out;
}

template TripletSet triplets_from_similarity<double>(const SimilarityMatrix&);
template TripletSet triplets_from_similarity<std::int64_t>(const IntSimilarityMatrix&);

template <typename Scalar>
QuadrupletSet quadruplets_from_similarity(const BasicSimilarityMatrix<Scalar>& s) {
  const int n = s.n();
  const std::uint64_t pairs = pair_count(static_cast<std::uint64_t>(n));
  if (pairs >= 2 && pair_count(pairs) > static_cast<std::uint64_t>(kMaxMaterialized))
    fail("quadruplets_from_similarity: space too large to materialize; use sample_uniform_quadruplets");
  QuadrupletSet out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = i; k < n; ++k)
        for (int l = (k == i ? j + 1 : k + 1); l < n; ++l) {
          const Scalar a = s(i, j);
          const Scalar b = s(k, l);
          if (a > b)
            out.insert({i, j, k, l});
          else if (b > a)
            out.insert({k, l, i, j});
        }
  return out;
}

template QuadrupletSet quadruplets_from_similarity<double>(const SimilarityMatrix&);
template QuadrupletSet quadruplets_from_similarity<std::int64_t>(const IntSimilarityMatrix&);

TripletSet sample_pairs_bernoulli(const TripletSet& t0, const SamplingParams& params, Rng& rng) {
  params.validate();
  std::vector<Triplet> canonical;
  canonical.reserve(t0.size() / 2);
  for (const Triplet& t : t0.items()) {
    if (!t0.contains({t.j, t.i, t.k}))
      fail("sample_pairs_bernoulli: input not closed under (i,j,k) <-> (j,i,k)");
    if (t.i < t.j) canonical.push_back(t);
  }
  // Canonical order makes the draw sequence a function of the set, not of
  // its insertion history.
  std::sort(canonical.begin(), canonical.end(), [](const Triplet& a, const Triplet& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  TripletSet out(t0.n());
  for (const Triplet& t : canonical)
    if (rng.bernoulli(params.p)) {
      out.insert(t);
      out.insert({t.j, t.i, t.k});
    }
  return out;
}

namespace {

// Floyd's algorithm: uniform m-subset of [0, space) without replacement.
std::pair<std::vector<std::uint64_t>, std::unordered_set<std::uint64_t>> floyd_sample(
    std::uint64_t space, std::uint64_t m, Rng& rng) {
  std::vector<std::uint64_t> order;
  std::unordered_set<std::uint64_t> chosen;
  order.reserve(m);
  chosen.reserve(m * 2);
  for (std::uint64_t v = space - m; v < space; ++v) {
    const std::uint64_t t = rng.below(v + 1);
    const std::uint64_t pick = chosen.count(t) ? v : t;
    chosen.insert(pick);
    order.push_back(pick);
  }
  return {std::move(order), std::move(chosen)};
}

}  // namespace

template <typename Scalar>
TripletSet sample_uniform_triplets(const BasicSimilarityMatrix<Scalar>& s, std::int64_t m, Rng& rng) {
  const int n = s.n();
  TripletSet out(n);
  if (m == 0) return out;
  if (m < 0) fail("sample_uniform_triplets: negative sample size");
  if (n < 3) fail("sample_uniform_triplets: sample size exceeds comparison space");
  const std::uint64_t anchors = static_cast<std::uint64_t>(n);
  const std::uint64_t pairs = pair_count(anchors - 1);
  const std::uint64_t space = anchors * pairs;
  if (static_cast<std::uint64_t>(m) > space)
    fail("sample_uniform_triplets: sample size exceeds comparison space");

  const auto orient = [&](std::uint64_t index) -> std::pair<bool, Triplet> {
    const int anchor = static_cast<int>(index / pairs);
    std::uint64_t a, b;
    unrank_pair(anchors - 1, index % pairs, a, b);
    const int j = static_cast<int>(a < static_cast<std::uint64_t>(anchor) ? a : a + 1);
    const int k = static_cast<int>(b < static_cast<std::uint64_t>(anchor) ? b : b + 1);
    const Scalar sij = s(anchor, j);
    const Scalar sik = s(anchor, k);
    if (sij > sik) return {true, Triplet{anchor, j, k}};
    if (sik > sij) return {true, Triplet{anchor, k, j}};
    return {false, Triplet{}};
  };

  auto [order, chosen] = floyd_sample(space, static_cast<std::uint64_t>(m), rng);
  out.reserve(static_cast<std::size_t>(m));
  for (std::uint64_t index : order) {
    const auto [ok, t] = orient(index);
    if (ok) out.insert(t);
  }

  // Ties leave a deficit; resample past them with a bounded budget, then
  // fall back to an exact scan of the space when it is small enough.
  std::uint64_t attempts = 0;
  const std::uint64_t budget = 200 * (static_cast<std::uint64_t>(m) - out.size()) + 100'000;
  while (out.size() < static_cast<std::size_t>(m) && attempts < budget) {
    ++attempts;
    const std::uint64_t index = rng.below(space);
    if (!chosen.insert(index).second) continue;
    const auto [ok, t] = orient(index);
    if (ok) out.insert(t);
  }
  if (out.size() < static_cast<std::size_t>(m)) {
    if (space > static_cast<std::uint64_t>(kMaxMaterialized))
      throw std::runtime_error("sample_uniform_triplets: too many tied comparisons to finish sampling");
    std::vector<std::uint64_t> remaining;
    for (std::uint64_t index = 0; index < space; ++index) {
      if (chosen.count(index)) continue;
      if (orient(index).first) remaining.push_back(index);
    }
    if (out.size() + remaining.size() < static_cast<std::size_t>(m))
      fail("sample_uniform_triplets: sample size exceeds tie-free comparison space");
    while (out.size() < static_cast<std::size_t>(m)) {
      const std::uint64_t pos = rng.below(remaining.size());
      out.insert(orient(remaining[pos]).second);
      remaining[pos] = remaining.back();
      remaining.pop_back();
    }
  }
  return out;
}

template TripletSet sample_uniform_triplets<double>(const SimilarityMatrix&, std::int64_t, Rng&);
template TripletSet sample_uniform_triplets<std::int64_t>(const IntSimilarityMatrix&, std::int64_t, Rng&);

template <typename Scalar>
QuadrupletSet sample_uniform_quadruplets(const BasicSimilarityMatrix<Scalar>& s, std::int64_t m, Rng& rng) {
  const int n = s.n();
  QuadrupletSet out(n);
  if (m == 0) return out;
  if (m < 0) fail("sample_uniform_quadruplets: negative sample size");
  if (n < 3) fail("sample_uniform_quadruplets: sample size exceeds comparison space");
  const std::uint64_t pairs = pair_count(static_cast<std::uint64_t>(n));
  const std::uint64_t space = pair_count(pairs);
  if (static_cast<std::uint64_t>(m) > space)
    fail("sample_uniform_quadruplets: sample size exceeds comparison space");

  const auto decode_pair = [&](std::uint64_t pair_id) -> std::pair<int, int> {
    std::uint64_t a, b;
    unrank_pair(static_cast<std::uint64_t>(n), pair_id, a, b);
    return {static_cast<int>(a), static_cast<int>(b)};
  };
  const auto orient = [&](std::uint64_t index) -> std::pair<bool, Quadruplet> {
    std::uint64_t p1, p2;
    unrank_pair(pairs, index, p1, p2);
    const auto [i, j] = decode_pair(p1);
    const auto [k, l] = decode_pair(p2);
    const Scalar a = s(i, j);
    const Scalar b = s(k, l);
    if (a > b) return {true, Quadruplet{i, j, k, l}};
    if (b > a) return {true, Quadruplet{k, l, i, j}};
    return {false, Quadruplet{}};
  };

  auto [order, chosen] = floyd_sample(space, static_cast<std::uint64_t>(m), rng);
  out.reserve(static_cast<std::size_t>(m));
  for (std::uint64_t index : order) {
    const auto [ok, q] = orient(index);
    if (ok) out.insert(q);
  }
  std::uint64_t attempts = 0;
  const std::uint64_t budget = 200 * (static_cast<std::uint64_t>(m) - out.size()) + 100'000;
  while (out.size() < static_cast<std::size_t>(m) && attempts < budget) {
    ++attempts;
    const std::uint64_t index = rng.below(space);
    if (!chosen.insert(index).second) continue;
    const auto [ok, q] = orient(index);
    if (ok) out.insert(q);
  }
  if (out.size() < static_cast<std::size_t>(m)) {
    if (space > static_cast<std::uint64_t>(kMaxMaterialized))
      throw std::runtime_error("sample_uniform_quadruplets: too many tied comparisons to finish sampling");
    std::vector<std::uint64_t> remaining;
    for (std::uint64_t index = 0; index < space; ++index) {
      if (chosen.count(index)) continue;
      if (orient(index).first) remaining.push_back(index);
    }
    if (out.size() + remaining.size() < static_cast<std::size_t>(m))
      fail("sample_uniform_quadruplets: sample size exceeds tie-free comparison space");
    while (out.size() < static_cast<std::size_t>(m)) {
      const std::uint64_t pos = rng.below(remaining.size());
      out.insert(orient(remaining[pos]).second);
      remaining[pos] = remaining.back();
      remaining.pop_back();
    }
  }
  return out;
}

template QuadrupletSet sample_uniform_quadruplets<double>(const SimilarityMatrix&, std::int64_t, Rng&);
template QuadrupletSet sample_uniform_quadruplets<std::int64_t>(const IntSimilarityMatrix&, std::int64_t, Rng&);

TripletSet flip_noise(const TripletSet& t, const NoiseParams& params, Rng& rng) {
  params.validate();
  TripletSet out(t.n());
  out.reserve(t.size());
  for (const Triplet& item : t.items()) out.insert(rng.bernoulli(params.flip_prob) ? item.flipped() : item);
  return out;
}

QuadrupletSet flip_noise(const QuadrupletSet& q, const NoiseParams& params, Rng& rng) {
  params.validate();
  QuadrupletSet out(q.n());
  out.reserve(q.size());
  for (const Quadruplet& item : q.items()) out.insert(rng.bernoulli(params.flip_prob) ? item.flipped() : item);
  return out;
}

namespace {

int checked_n(int n, int needed, const char* what) {
  const int result = n < 0 ? needed : n;
  if (needed > result) fail(std::string(what) + ": index exceeds object count");
  return std::max(result, 1);
}

}  // namespace

TripletSet convert_central(std::span<const CentralAnswer> answers, int n) {
  int needed = 0;
  for (const auto& a : answers) needed = std::max({needed, a.i + 1, a.j + 1, a.k + 1});
  TripletSet out(checked_n(n, needed, "convert_central"));
  for (const auto& a : answers) {
    if (a.i == a.j || a.i == a.k || a.j == a.k) fail("convert_central: query objects must be distinct");
    int other1, other2;
    if (a.central == a.i) {
      other1 = a.j; other2 = a.k;
    } else if (a.central == a.j) {
      other1 = a.i; other2 = a.k;
    } else if (a.central == a.k) {
      other1 = a.i; other2 = a.j;
    } else {
      fail("convert_central: answer " + std::to_string(a.central) + " is not one of the query objects");
    }
    out.insert({other1, a.central, other2});
    out.insert({other2, a.central, other1});
  }
  return out;
}

TripletSet convert_odd_out(std::span<const OddOutAnswer> answers, int n) {
  int needed = 0;
  for (const auto& a : answers) needed = std::max({needed, a.i + 1, a.j + 1, a.k + 1});
  TripletSet out(checked_n(n, needed, "convert_odd_out"));
  for (const auto& a : answers) {
    if (a.i == a.j || a.i == a.k || a.j == a.k) fail("convert_odd_out: query objects must be distinct");
    int other1, other2;
    if (a.odd == a.i) {
      other1 = a.j; other2 = a.k;
    } else if (a.odd == a.j) {
      other1 = a.i; other2 = a.k;
    } else if (a.odd == a.k) {
      other1 = a.i; other2 = a.j;
    } else {
      fail("convert_odd_out: answer " + std::to_string(a.odd) + " is not one of the query objects");
    }
    out.insert({other1, other2, a.odd});
    out.insert({other2, other1, a.odd});
  }
  return out;
}

TripletSet convert_rank2of8(std::span<const Rank2of8Answer> answers, int n) {
  int needed = 0;
  for (const auto& a : answers) {
    needed = std::max(needed, a.ref + 1);
    for (int c : a.candidates) needed = std::max(needed, c + 1);
  }
  TripletSet out(checked_n(n, needed, "convert_rank2of8"));
  for (const auto& a : answers) {
    for (std::size_t x = 0; x < a.candidates.size(); ++x) {
      if (a.candidates[x] == a.ref) fail("convert_rank2of8: reference among the candidates");
      for (std::size_t y = x + 1; y < a.candidates.size(); ++y)
        if (a.candidates[x] == a.candidates[y]) fail("convert_rank2of8: duplicate candidate");
    }
    if (a.first == a.ref || a.second == a.ref) fail("convert_rank2of8: ranked pair contains the reference");
    if (a.first == a.second) fail("convert_rank2of8: ranked pair must be two distinct candidates");
    const auto is_candidate = [&](int v) {
      return std::find(a.candidates.begin(), a.candidates.end(), v) != a.candidates.end();
    };
    if (!is_candidate(a.first) || !is_candidate(a.second))
      fail("convert_rank2of8: ranked objects must be candidates");
    // 11 triplets: the top candidate beats the other 6, the runner-up beats
    // the remaining 5.
    for (int c : a.candidates)
      if (c != a.first) out.insert({a.ref, a.first, c});
    for (int c : a.candidates)
      if (c != a.first && c != a.second) out.insert({a.ref, a.second, c});
  }
  return out;
}

TripletSet restrict_triplets(const TripletSet& t, const std::vector<int>& keep) {
  if (keep.empty()) fail("restrict_triplets: empty subset");
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() < 0 || sorted.back() >= t.n()) fail("restrict_triplets: subset id out of range");
  std::vector<int> new_label(t.n(), -1);
  for (std::size_t x = 0; x < sorted.size(); ++x) new_label[sorted[x]] = static_cast<int>(x);
  TripletSet out(static_cast<int>(sorted.size()));
  for (const Triplet& item : t.items()) {
    const int i = new_label[item.i];
    const int j = new_label[item.j];
    const int k = new_label[item.k];
    if (i >= 0 && j >= 0 && k >= 0) out.insert({i, j, k});
  }
  return out;
}

namespace {

std::vector<std::vector<long long>> read_int_lines(const std::filesystem::path& path, std::size_t width,
                                                   const char* what) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::vector<long long>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::vector<long long> row;
    long long v;
    while (fields >> v) row.push_back(v);
    if (!fields.eof()) throw std::runtime_error(std::string(what) + ": non-integer token in '" + line + "'");
    if (row.empty()) continue;
    if (row.size() != width)
      throw std::runtime_error(std::string(what) + ": expected " + std::to_string(width) +
                               " indices per line, got '" + line + "'");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<Triplet> read_triplets(const std::filesystem::path& path) {
  std::vector<Triplet> out;
  for (const auto& row : read_int_lines(path, 3, "triplet file")) {
    const Triplet t{static_cast<int>(row[0]), static_cast<int>(row[1]), static_cast<int>(row[2])};
    if (t.i < 0 || t.j < 0 || t.k < 0) throw std::runtime_error("triplet file: negative index");
    if (t.i == t.j || t.i == t.k || t.j == t.k)
      throw std::runtime_error("triplet file: duplicate index in a triplet");
    out.push_back(t);
  }
  return out;
}

std::vector<Quadruplet> read_quadruplets(const std::filesystem::path& path) {
  std::vector<Quadruplet> out;
  for (const auto& row : read_int_lines(path, 4, "quadruplet file")) {
    const Quadruplet q{static_cast<int>(row[0]), static_cast<int>(row[1]), static_cast<int>(row[2]),
                       static_cast<int>(row[3])};
    if (q.i < 0 || q.k < 0) throw std::runtime_error("quadruplet file: negative index");
    if (q.i >= q.j || q.k >= q.l) throw std::runtime_error("quadruplet file: pairs must satisfy i < j, k < l");
    if (q.i == q.k && q.j == q.l) throw std::runtime_error("quadruplet file: identical pairs");
    out.push_back(q);
  }
  return out;
}

void write_triplets(const std::filesystem::path& path, std::span<const Triplet> triplets) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (const Triplet& t : triplets) out << t.i << ' ' << t.j << ' ' << t.k << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

void write_quadruplets(const std::filesystem::path& path, std::span<const Quadruplet> quadruplets) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (const Quadruplet& q : quadruplets) out << q.i << ' ' << q.j << ' ' << q.k << ' ' << q.l << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

TripletSet triplet_set_from(std::span<const Triplet> triplets, int n) {
  TripletSet out(n);
  out.reserve(triplets.size());
  for (const Triplet& t : triplets) out.insert(t);
  return out;
}

QuadrupletSet quadruplet_set_from(std::span<const Quadruplet> quadruplets, int n) {
  QuadrupletSet out(n);
  out.reserve(quadruplets.size());
  for (const Quadruplet& q : quadruplets) out.insert(q);
  return out;
}

int infer_object_count(std::span<const Triplet> triplets) {
  int n = 1;
  for (const Triplet& t : triplets) n = std::max({n, t.i + 1, t.j + 1, t.k + 1});
  return n;
}

int infer_object_count(std::span<const Quadruplet> quadruplets) {
  int n = 1;
  for (const Quadruplet& q : quadruplets) n = std::max({n, q.j + 1, q.l + 1});
  return n;
}

TripletSet convert_query_csv(const std::filesystem::path& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  std::string kind;
  std::vector<std::vector<long long>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream fields(line);
    while (std::getline(fields, cell, ',')) {
      cell.erase(0, cell.find_first_not_of(" \t"));
      cell.erase(cell.find_last_not_of(" \t") + 1);
      cells.push_back(cell);
    }
    if (kind.empty()) {
      kind = cells.empty() ? "" : cells[0];
      if (kind != "central" && kind != "oddout" && kind != "rank2of8")
        throw std::runtime_error("query csv: header must name central, oddout or rank2of8");
      continue;
    }
    std::vector<long long> row;
    for (const std::string& c : cells) {
      long long v = 0;
      const auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
      if (ec != std::errc() || ptr != c.data() + c.size())
        throw std::runtime_error("query csv: bad integer '" + c + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (kind.empty()) throw std::runtime_error("query csv: missing header");

  const auto need = [&](const std::vector<long long>& row, std::size_t width) {
    if (row.size() != width)
      throw std::runtime_error("query csv: expected " + std::to_string(width) + " columns per row");
  };
  if (kind == "central") {
    std::vector<CentralAnswer> answers;
    for (const auto& row : rows) {
      need(row, 4);
      answers.push_back({static_cast<int>(row[0]), static_cast<int>(row[1]), static_cast<int>(row[2]),
                         static_cast<int>(row[3])});
    }
    return convert_central(answers, n);
  }
  if (kind == "oddout") {
    std::vector<OddOutAnswer> answers;
    for (const auto& row : rows) {
      need(row, 4);
      answers.push_back({static_cast<int>(row[0]), static_cast<int>(row[1]), static_cast<int>(row[2]),
                         static_cast<int>(row[3])});
    }
    return convert_odd_out(answers, n);
  }
  std::vector<Rank2of8Answer> answers;
  for (const auto& row : rows) {
    need(row, 10);
    Rank2of8Answer a;
    a.ref = static_cast<int>(row[0]);
    for (int c = 0; c < 7; ++c) a.candidates[c] = static_cast<int>(row[1 + c]);
    a.first = static_cast<int>(row[8]);
    a.second = static_cast<int>(row[9]);
    answers.push_back(a);
  }
  return convert_rank2of8(answers, n);
}

}  // namespace trevhc
