#include "arrangelab/matrix.hpp"

#include <stdexcept>

namespace arrangelab {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

void Matrix::append_row(const Vector& row) {
  if (row.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

namespace {

// Forward elimination to row echelon form with unit pivots. Rows whose entry
// in the pivot column is already zero are left untouched, which keeps the
// sparse substitution systems cheap.
EchelonForm forward(const Matrix& m, bool reduce_above) {
  std::vector<Vector> work;
  work.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row(m.cols());
    bool nonzero = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row[c] = m(r, c);
      nonzero = nonzero || !row[c].is_zero();
    }
    if (nonzero) work.push_back(std::move(row));
  }

  EchelonForm out;
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.cols() && next < work.size(); ++col) {
    std::size_t pick = work.size();
    for (std::size_t r = next; r < work.size(); ++r) {
      if (!work[r][col].is_zero()) {
        pick = r;
        break;
      }
    }
    if (pick == work.size()) continue;
    std::swap(work[next], work[pick]);
    Vector& prow = work[next];
    if (!prow[col].is_one()) {
      Scalar inv = prow[col].inv();
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!prow[c].is_zero()) prow[c] *= inv;
    }
    std::vector<std::size_t> support;
    for (std::size_t c = col + 1; c < m.cols(); ++c)
      if (!prow[c].is_zero()) support.push_back(c);
    for (std::size_t r = next + 1; r < work.size(); ++r) {
      Vector& row = work[r];
      if (row[col].is_zero()) continue;
      Scalar f = row[col];
      for (std::size_t c : support) row[c].sub_mul(f, prow[c]);
      row[col] = m.field().zero();
    }
    out.pivots.push_back(col);
    ++next;
  }
  work.resize(next);
  out.rows = std::move(work);

  if (reduce_above) {
    const std::size_t n = out.rows.size();
    for (std::size_t i = n; i-- > 0;) {
      const std::size_t col = out.pivots[i];
      std::vector<std::size_t> support;
      for (std::size_t c = col + 1; c < m.cols(); ++c)
        if (!out.rows[i][c].is_zero()) support.push_back(c);
      for (std::size_t r = 0; r < i; ++r) {
        Vector& row = out.rows[r];
        if (row[col].is_zero()) continue;
        Scalar f = row[col];
        for (std::size_t c : support) row[c].sub_mul(f, out.rows[i][c]);
        row[col] = m.field().zero();
      }
    }
  }
  return out;
}

}  // namespace

EchelonForm reduced_echelon(const Matrix& m) { return forward(m, true); }

std::size_t rank(const Matrix& m) {
  if (m.field().kind() == FieldKind::rational) {
    if (auto r = detail::modular_rank(m)) return *r;
  }
  return forward(m, false).rows.size();
}

std::size_t nullity(const Matrix& m) { return m.cols() - rank(m); }

std::vector<Vector> nullspace(const Matrix& m) {
  if (m.field().kind() == FieldKind::rational) {
    if (auto ns = detail::modular_nullspace(m)) return std::move(*ns);
  }
  return detail::elimination_nullspace(m);
}

namespace detail {

std::vector<Vector> elimination_nullspace(const Matrix& m) {
  EchelonForm e = reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols(), m.field().zero());
    v[f] = m.field().one();
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t elimination_rank(const Matrix& m) { return forward(m, false).rows.size(); }

}  // namespace detail

}  // namespace arrangelab
