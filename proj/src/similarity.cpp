#include "trevhc/similarity.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "trevhc/comparisons.hpp"

namespace trevhc {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void check_index(int idx, int n, const char* what) {
  if (idx < 0 || idx >= n) fail(std::string(what) + ": index " + std::to_string(idx) + " out of range for n=" + std::to_string(n));
}

}  // namespace

template <typename Scalar>
BasicSimilarityMatrix<Scalar>::BasicSimilarityMatrix(int n) : n_(n) {
  if (n < 1) fail("similarity matrix: n must be >= 1");
  values_.assign(static_cast<std::size_t>(n) * n, Scalar(0));
}

template <typename Scalar>
void BasicSimilarityMatrix<Scalar>::set(int i, int j, Scalar value) {
  check_index(i, n_, "similarity");
  check_index(j, n_, "similarity");
  if (i == j) fail("similarity: diagonal is fixed at zero");
  values_[static_cast<std::size_t>(i) * n_ + j] = value;
  values_[static_cast<std::size_t>(j) * n_ + i] = value;
}

template <typename Scalar>
void BasicSimilarityMatrix<Scalar>::add(int i, int j, Scalar delta) {
  check_index(i, n_, "similarity");
  check_index(j, n_, "similarity");
  if (i == j) fail("similarity: diagonal is fixed at zero");
  values_[static_cast<std::size_t>(i) * n_ + j] += delta;
  values_[static_cast<std::size_t>(j) * n_ + i] += delta;
}

template class BasicSimilarityMatrix<double>;
template class BasicSimilarityMatrix<std::int64_t>;

SimilarityMatrix to_double(const IntSimilarityMatrix& s) {
  SimilarityMatrix out(s.n());
  for (int i = 0; i < s.n(); ++i)
    for (int j = i + 1; j < s.n(); ++j) out.set(i, j, static_cast<double>(s(i, j)));
  return out;
}

IntSimilarityMatrix adds3(std::span<const Triplet> triplets, int n) {
  IntSimilarityMatrix s(n);
  for (const Triplet& t : triplets) {
    check_index(t.i, n, "adds3");
    check_index(t.j, n, "adds3");
    check_index(t.k, n, "adds3");
    s.add(t.i, t.j, 1);
    s.add(t.i, t.k, -1);
  }
  return s;
}

IntSimilarityMatrix adds3(const TripletSet& triplets) { return adds3(triplets.items(), triplets.n()); }

IntSimilarityMatrix adds4(std::span<const Quadruplet> quadruplets, int n) {
  IntSimilarityMatrix s(n);
  for (const Quadruplet& q : quadruplets) {
    check_index(q.i, n, "adds4");
    check_index(q.j, n, "adds4");
    check_index(q.k, n, "adds4");
    check_index(q.l, n, "adds4");
    s.add(q.i, q.j, 1);
    s.add(q.k, q.l, -1);
  }
  return s;
}

IntSimilarityMatrix adds4(const QuadrupletSet& quadruplets) {
  return adds4(quadruplets.items(), quadruplets.n());
}

IntSimilarityMatrix latent_adds3(const Dendrogram& latent) {
  const int n = latent.leaf_count();
  const LcaSizeMatrix lca(latent);
  IntSimilarityMatrix s(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.set(i, j, 2 * std::int64_t{n} + 2 - 3 * lca.size(i, j));
  return s;
}

SimilarityMatrix cosine_similarity(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) fail("cosine: empty embedding");
  const std::size_t dim = rows[0].size();
  std::vector<double> norms(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i].size() != dim) fail("cosine: ragged embedding rows");
    double sq = 0;
    for (double x : rows[i]) sq += x * x;
    if (sq == 0.0) fail("cosine: zero-norm row " + std::to_string(i));
    norms[i] = std::sqrt(sq);
  }
  SimilarityMatrix s(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double dot = 0;
      for (std::size_t d = 0; d < dim; ++d) dot += rows[i][d] * rows[j][d];
      s.set(i, j, dot / (norms[i] * norms[j]));
    }
  return s;
}

namespace {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<std::vector<double>> read_csv_rows(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      double value = 0;
      const auto [ptr, ec] = std::from_chars(p, end, value);
      if (ec != std::errc()) throw std::runtime_error("csv: bad number in " + path.string() + ": '" + line + "'");
      row.push_back(value);
      p = ptr;
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      if (p < end) {
        if (*p != ',') throw std::runtime_error("csv: expected ',' in " + path.string());
        ++p;
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

template <typename Scalar>
BasicSimilarityMatrix<Scalar> similarity_from_rows(const std::vector<std::vector<double>>& rows,
                                                   const std::filesystem::path& path) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw std::runtime_error("similarity csv: empty matrix in " + path.string());
  BasicSimilarityMatrix<Scalar> s(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::runtime_error("similarity csv: row " + std::to_string(i) + " has " +
                               std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
    if (rows[i][i] != 0.0)
      throw std::runtime_error("similarity csv: nonzero diagonal at row " + std::to_string(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double a = rows[i][j];
      const double b = rows[j][i];
      if (std::abs(a - b) > 1e-9)
        throw std::runtime_error("similarity csv: asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if constexpr (std::is_same_v<Scalar, std::int64_t>) {
        if (a != std::floor(a)) throw std::runtime_error("similarity csv: non-integer entry where integers expected");
        s.set(i, j, static_cast<std::int64_t>(a));
      } else {
        s.set(i, j, a);
      }
    }
  return s;
}

}  // namespace

void write_similarity_csv(const std::filesystem::path& path, const SimilarityMatrix& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (int i = 0; i < s.n(); ++i) {
    for (int j = 0; j < s.n(); ++j) {
      if (j) out << ',';
      out << format_double(s(i, j));
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

void write_similarity_csv(const std::filesystem::path& path, const IntSimilarityMatrix& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (int i = 0; i < s.n(); ++i) {
    for (int j = 0; j < s.n(); ++j) {
      if (j) out << ',';
      out << s(i, j);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

SimilarityMatrix read_similarity_csv(const std::filesystem::path& path) {
  return similarity_from_rows<double>(read_csv_rows(path), path);
}

IntSimilarityMatrix read_int_similarity_csv(const std::filesystem::path& path) {
  return similarity_from_rows<std::int64_t>(read_csv_rows(path), path);
}

std::vector<std::vector<double>> read_embedding_csv(const std::filesystem::path& path) {
  auto rows = read_csv_rows(path);
  if (rows.empty()) throw std::runtime_error("embedding csv: no rows in " + path.string());
  return rows;
}

}  // namespace trevhc
