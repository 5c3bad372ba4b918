#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "galoiskit/scalar.hpp"

namespace galoiskit::linalg {

using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;  // row-major

/// Brings the leading `pivot_cols` columns of m into reduced row echelon
/// form (row operations act on every column). Returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t pivot_cols);

/// Basis of {v : m v = 0}. The basis is the canonical one read off the
/// reduced row echelon form, so equal subspaces give equal bases.
std::vector<Vec> kernel(Matrix m, std::size_t cols);

/// Solves A X = B, where A is n x n given by its columns and B is given by
/// its columns. Returns the columns of X, or nullopt when A is singular.
std::optional<std::vector<Vec>> solve_columns(const std::vector<Vec>& a_cols,
                                              const std::vector<Vec>& b_cols);

/// Incrementally maintained echelon basis that remembers how each reduced
/// row was formed from the inserted vectors.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  /// Reduces v against the basis. If v is dependent, returns the relation
  /// coefficients c with sum c_i * inserted_i = v; otherwise inserts v and
  /// returns nullopt.
  std::optional<Vec> insert(const Vec& v);

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  struct Row {
    Vec values;
    Vec combination;  // over inserted vectors
    std::size_t pivot;
  };
  std::size_t dim_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
};

}  // namespace galoiskit::linalg
