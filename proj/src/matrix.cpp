#include "qpade/matrix.hpp"

namespace qpade {

namespace {

// Row echelon reduction used by rank/nullspace/solve. Returns pivot columns.
std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    Scalar piv = m[r][c];
    for (auto& x : m[r]) x /= piv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

Scalar det_exact(Mat a) {
  size_t n = a.size();
  if (n == 0) return Scalar(1);
  // Bareiss: divisions by the previous pivot are exact over any integral domain.
  Scalar prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t sel = k + 1;
      while (sel < n && a[sel][k].is_zero()) ++sel;
      if (sel == n) return Scalar(0);
      std::swap(a[k], a[sel]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::vector<Scalar> solve_linear(Mat a, std::vector<Scalar> b) {
  if (a.size() != b.size()) throw singular_error("shape mismatch in solve");
  if (a.empty()) return {};
  size_t cols = a[0].size();
  for (size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  std::vector<int> pivots = rref(a);
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols))
    throw singular_error("inconsistent linear system");
  if (pivots.size() < cols) throw singular_error("linear system is not full rank");
  std::vector<Scalar> x(cols, Scalar(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

int rank_exact(Mat a) { return static_cast<int>(rref(a).size()); }

std::vector<std::vector<Scalar>> nullspace(Mat a) {
  if (a.empty()) return {};
  size_t cols = a[0].size();
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[free] = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Poly det_poly(const std::vector<std::vector<Poly>>& a) {
  size_t n = a.size();
  if (n == 0) return Poly{Scalar(1)};
  if (n == 1) return a[0][0];
  Poly total;
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Poly>> minor;
    minor.reserve(n - 1);
    for (size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      row.reserve(n - 1);
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    Poly term = poly_mul(a[0][j], det_poly(minor));
    total = (j % 2 == 0) ? poly_add(total, term) : poly_sub(total, term);
  }
  return total;
}

}  // namespace qpade
