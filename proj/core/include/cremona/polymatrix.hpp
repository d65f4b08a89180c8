#pragma once

#include <vector>

#include "cremona/polynomial.hpp"

namespace cremona {

// Rectangular matrix of polynomials over one ring.
template <class K>
class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, const Polynomial<K>& zero)
      : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols), zero) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Polynomial<K>& at(int i, int j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Polynomial<K>& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i * cols_ + j)];
  }

  void check() const {
    for (const auto& p : e_) e_.front().check_same_ring(p);
  }

  PolyMatrix submatrix_without_row(int row) const {
    PolyMatrix s(rows_ - 1, cols_, e_.front());
    int r = 0;
    for (int i = 0; i < rows_; ++i) {
      if (i == row) continue;
      for (int j = 0; j < cols_; ++j) s.at(r, j) = at(i, j);
      ++r;
    }
    return s;
  }

 private:
  int rows_, cols_;
  std::vector<Polynomial<K>> e_;
};

// Exact determinant by cofactor expansion along the first column. The sizes
// in play never exceed 4, so no fraction-free elimination is needed.
template <class K>
Polynomial<K> determinant(const PolyMatrix<K>& m) {
  if (m.rows() != m.cols()) throw StructuralError("determinant of non-square matrix");
  if (m.rows() == 0 || m.rows() > 4)
    throw StructuralError("determinant supports sizes 1 through 4");
  m.check();
  const Ring& ring = m.at(0, 0).ring();
  if (m.rows() == 1) return m.at(0, 0);
  Polynomial<K> acc = Polynomial<K>::zero(ring, m.at(0, 0).order());
  for (int i = 0; i < m.rows(); ++i) {
    if (m.at(i, 0).is_zero()) continue;
    PolyMatrix<K> sub(m.rows() - 1, m.cols() - 1, acc);
    int r = 0;
    for (int ii = 0; ii < m.rows(); ++ii) {
      if (ii == i) continue;
      for (int jj = 1; jj < m.cols(); ++jj) sub.at(r, jj - 1) = m.at(ii, jj);
      ++r;
    }
    Polynomial<K> term = m.at(i, 0) * determinant(sub);
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Determinant of the matrix with row `skip` removed; expects one more row
// than columns (the 4x3 case of the signed-minor construction).
template <class K>
Polynomial<K> minor_without_row(const PolyMatrix<K>& m, int skip) {
  if (m.rows() != m.cols() + 1) throw StructuralError("minor_without_row: shape mismatch");
  return determinant(m.submatrix_without_row(skip));
}

}  // namespace cremona
