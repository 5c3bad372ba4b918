#include "galoiskit/linalg.hpp"

namespace galoiskit::linalg {

std::vector<std::size_t> rref(Matrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && sgn(m[piv][col]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const Rational inv = Rational(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t k = col; k < m[r].size(); ++k)
        if (sgn(m[row][k]) != 0) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<Vec> kernel(Matrix m, std::size_t cols) {
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Vec>> solve_columns(const std::vector<Vec>& a_cols,
                                              const std::vector<Vec>& b_cols) {
  const std::size_t n = a_cols.size();
  Matrix m(n, Vec(n + b_cols.size()));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) m[r][c] = a_cols[c][r];
  for (std::size_t c = 0; c < b_cols.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) m[r][n + c] = b_cols[c][r];
  if (rref(m, n).size() != n) return std::nullopt;
  std::vector<Vec> x(b_cols.size(), Vec(n));
  for (std::size_t c = 0; c < b_cols.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) x[c][r] = m[r][n + c];
  return x;
}

std::optional<Vec> EchelonBasis::insert(const Vec& v) {
  Row row{v, Vec(inserted_ + 1, Rational(0)), 0};
  row.combination[inserted_] = 1;
  for (const auto& r : rows_) {
    if (sgn(row.values[r.pivot]) == 0) continue;
    const Rational f = row.values[r.pivot] / r.values[r.pivot];
    for (std::size_t k = 0; k < dim_; ++k)
      if (sgn(r.values[k]) != 0) row.values[k] -= f * r.values[k];
    for (std::size_t k = 0; k < r.combination.size(); ++k)
      if (sgn(r.combination[k]) != 0) row.combination[k] -= f * r.combination[k];
  }
  ++inserted_;
  std::size_t pivot = 0;
  while (pivot < dim_ && sgn(row.values[pivot]) == 0) ++pivot;
  if (pivot == dim_) {
    // 0 = combination . inserted, solve for the newest vector
    Vec relation(inserted_ - 1);
    const Rational& lead = row.combination[inserted_ - 1];
    for (std::size_t k = 0; k + 1 < inserted_; ++k) relation[k] = -row.combination[k] / lead;
    --inserted_;
    return relation;
  }
  row.pivot = pivot;
  rows_.push_back(std::move(row));
  return std::nullopt;
}

}  // namespace galoiskit::linalg
