#include "trevhc/linkage.hpp"

#include <utility>
#include <vector>

namespace trevhc {

template <typename Scalar>
Dendrogram average_linkage(const BasicSimilarityMatrix<Scalar>& s) {
  const int n = s.n();
  if (n == 1) return Dendrogram::from_merges(1, {});

  // Average similarities live in a reusable n x n double buffer; each merge
  // collapses two rows into one. Cluster ids are tracked separately from row
  // slots so the tie rule sees the merge-list ids.
  std::vector<double> avg(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) avg[static_cast<std::size_t>(i) * n + j] = static_cast<double>(s(i, j));

  std::vector<int> rows(n);
  std::vector<int> id(n);
  std::vector<double> size(n);
  for (int i = 0; i < n; ++i) {
    rows[i] = i;
    id[i] = i;
    size[i] = 1.0;
  }

  std::vector<std::pair<int, int>> merges;
  merges.reserve(n - 1);
  const auto at = [&](int r, int c) -> double& { return avg[static_cast<std::size_t>(r) * n + c]; };

  for (int step = 0; step < n - 1; ++step) {
    const int active = static_cast<int>(rows.size());
    int best_a = -1, best_b = -1;
    double best = 0.0;
    int best_lo = 0, best_hi = 0;
    for (int x = 0; x < active; ++x)
      for (int y = x + 1; y < active; ++y) {
        const double value = at(rows[x], rows[y]);
        const int lo = std::min(id[rows[x]], id[rows[y]]);
        const int hi = std::max(id[rows[x]], id[rows[y]]);
        if (best_a < 0 || value > best ||
            (value == best && (lo < best_lo || (lo == best_lo && hi < best_hi)))) {
          best = value;
          best_a = x;
          best_b = y;
          best_lo = lo;
          best_hi = hi;
        }
      }

    const int ra = rows[best_a];
    const int rb = rows[best_b];
    merges.emplace_back(best_lo, best_hi);

    const double wa = size[ra];
    const double wb = size[rb];
    for (int x = 0; x < active; ++x) {
      const int rc = rows[x];
      if (rc == ra || rc == rb) continue;
      const double merged = (wa * at(ra, rc) + wb * at(rb, rc)) / (wa + wb);
      at(ra, rc) = merged;
      at(rc, ra) = merged;
    }
    size[ra] = wa + wb;
    id[ra] = n + step;
    rows.erase(rows.begin() + best_b);
  }
  return Dendrogram::from_merges(n, std::move(merges));
}

template Dendrogram average_linkage<double>(const SimilarityMatrix&);
template Dendrogram average_linkage<std::int64_t>(const IntSimilarityMatrix&);

}  // namespace trevhc
