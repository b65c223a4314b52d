#include <algorithm>
#include <numeric>

#include "indcluster/error.hpp"
#include "indcluster/grassmann.hpp"

namespace indcluster {

Rational determinant(Matrix a) {
  std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

std::size_t matrix_rank(Matrix a) {
  std::size_t rank = 0;
  if (a.empty()) return 0;
  std::size_t cols = a[0].size();
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

MinorsOracle::MinorsOracle(int rows, int cols, Matrix matrix) : rows_(rows), cols_(cols), matrix_(std::move(matrix)) {
  if (static_cast<int>(matrix_.size()) != rows_)
    throw Error(ErrorCode::InvalidArgument, "matrix must have m rows");
  for (const auto& r : matrix_)
    if (static_cast<int>(r.size()) != rows_ + cols_)
      throw Error(ErrorCode::InvalidArgument, "matrix must have m+n columns");
}

Rational MinorsOracle::operator()(const Partition& p) const {
  if (!p.fits(rows_, cols_)) return 0;
  auto label = finite_label(p, rows_, cols_);
  Matrix sub(static_cast<std::size_t>(rows_), std::vector<Rational>(static_cast<std::size_t>(rows_)));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rows_; ++j)
      sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(label[static_cast<std::size_t>(j)] + rows_)];
  return determinant(std::move(sub));
}

Assignment MinorsOracle::assignment(const Seed& s) const {
  Assignment a;
  for (const auto& cv : s.vars())
    if (cv.label) a[cv.id] = (*this)(*cv.label);
  return a;
}

MinorsOracle minors_oracle(int rows, int cols, const Matrix& m) { return MinorsOracle(rows, cols, m); }

Matrix random_matrix(int rows, int total_cols, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  Matrix m(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(total_cols)));
  for (auto& row : m)
    for (auto& x : row) x = Rational(dist(rng));
  return m;
}

LaurentPoly symbolic_minor(const Partition& p, int rows, int cols) {
  auto label = finite_label(p, rows, cols);
  std::vector<int> perm(static_cast<std::size_t>(rows));
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly det;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    LaurentPoly term(inversions % 2 ? -1 : 1);
    for (int i = 0; i < rows; ++i) {
      int col = label[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] + rows;
      term *= LaurentPoly::variable(var("M[" + std::to_string(i) + "," + std::to_string(col) + "]"));
    }
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace indcluster
