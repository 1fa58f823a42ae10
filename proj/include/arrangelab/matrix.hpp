#pragma once

#include "arrangelab/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace arrangelab {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Appends a row; `row.size()` must equal cols().
  void append_row(const Vector& row);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Row-reduced echelon form: pivot entries 1, leftmost pivots first.
struct EchelonForm {
  std::vector<Vector> rows;          // the nonzero rows
  std::vector<std::size_t> pivots;   // pivot column of each row
};

EchelonForm reduced_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Canonical basis of the right nullspace: one vector per free column f,
/// with a 1 at f and zeros at the other free columns.
std::vector<Vector> nullspace(const Matrix& m);

std::size_t nullity(const Matrix& m);

namespace detail {
/// Plain field elimination, used for every field.
std::vector<Vector> elimination_nullspace(const Matrix& m);
std::size_t elimination_rank(const Matrix& m);
/// Multi-modular nullspace over Q with exact verification of the result;
/// nullopt when the prime budget runs out before the result verifies.
std::optional<std::vector<Vector>> modular_nullspace(const Matrix& m);
std::optional<std::size_t> modular_rank(const Matrix& m);
}  // namespace detail

}  // namespace arrangelab
