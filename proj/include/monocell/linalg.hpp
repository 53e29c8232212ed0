#pragma once

// Small dense exact linear algebra: rank, affine rank, linear solves.
// Dimensions here are tiny (ambient dimension <= 5), so plain Gaussian
// elimination over the rationals is appropriate.

#include "monocell/rat.hpp"

#include <optional>
#include <vector>

namespace monocell {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline int mat_rank(Mat m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat factor = m[r][col] / m[row][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Rank of the affine hull of a point set: rank of differences to the first
// point. A single point has affine rank 0; empty input -1.
inline int affine_rank(const std::vector<Vec>& pts) {
  if (pts.empty()) return -1;
  if (pts.size() == 1) return 0;
  Mat diffs;
  diffs.reserve(pts.size() - 1);
  for (size_t i = 1; i < pts.size(); ++i) {
    Vec d(pts[0].size());
    for (size_t c = 0; c < d.size(); ++c) d[c] = pts[i][c] - pts[0][c];
    diffs.push_back(std::move(d));
  }
  return mat_rank(std::move(diffs));
}

// Solves A x = b for square or overdetermined consistent systems; returns
// nullopt when the system is inconsistent or underdetermined.
inline std::optional<Vec> solve_linear(Mat a, Vec b) {
  const size_t rows = a.size();
  if (rows == 0) return Vec{};
  const size_t cols = a[0].size();
  std::vector<int> pivot_col_of_row(rows, -1);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    std::swap(b[piv], b[row]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rat factor = a[r][col] / a[row][col];
      for (size_t c = col; c < cols; ++c) a[r][c] -= factor * a[row][c];
      b[r] -= factor * b[row];
    }
    pivot_col_of_row[row] = static_cast<int>(col);
    ++row;
  }
  for (size_t r = row; r < rows; ++r)
    if (b[r] != 0) return std::nullopt;  // inconsistent
  Vec x(cols, Rat(0));
  std::vector<bool> pivoted(cols, false);
  for (size_t r = 0; r < row; ++r) {
    int c = pivot_col_of_row[r];
    x[c] = b[r] / a[r][c];
    pivoted[c] = true;
  }
  for (size_t c = 0; c < cols; ++c)
    if (!pivoted[c]) return std::nullopt;  // underdetermined
  return x;
}

inline Rat dot(const Vec& a, const Vec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace monocell
