#pragma once

#include <optional>
#include <vector>

#include "cremona/domain.hpp"
#include "cremona/errors.hpp"
#include "cremona/rng.hpp"

namespace cremona {

// Dense exact matrix over a field; enough linear algebra for graded pieces,
// incidence systems and coordinate changes. Not a performance structure.
template <class K>
class DenseMatrix {
 public:
  DenseMatrix(int rows, int cols, const K& zero)
      : rows_(rows), cols_(cols), zero_(zero), a_(static_cast<std::size_t>(rows * cols), zero) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& at(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const K& at(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  static DenseMatrix identity(int n, const K& one) {
    DenseMatrix m(n, n, one.zero());
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_, zero_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  DenseMatrix mul(const DenseMatrix& o) const {
    if (cols_ != o.rows_) throw StructuralError("matrix product shape mismatch");
    DenseMatrix r(rows_, o.cols_, zero_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
      }
    return r;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw StructuralError("matrix apply shape mismatch");
    std::vector<K> r(static_cast<std::size_t>(rows_), zero_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        r[static_cast<std::size_t>(i)] =
            r[static_cast<std::size_t>(i)] + at(i, j) * v[static_cast<std::size_t>(j)];
    return r;
  }

  // Reduced row echelon form in place. Returns rank; records pivot columns.
  int rref_in_place(std::vector<int>* pivot_cols = nullptr) {
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int pivot = -1;
      for (int i = r; i < rows_; ++i)
        if (!at(i, c).is_zero()) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      if (pivot != r)
        for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(r, j));
      K inv = at(r, c).inv();
      for (int j = c; j < cols_; ++j) at(r, j) = at(r, j) * inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || at(i, c).is_zero()) continue;
        K f = at(i, c);
        for (int j = c; j < cols_; ++j) at(i, j) = at(i, j) - f * at(r, j);
      }
      if (pivot_cols) pivot_cols->push_back(c);
      ++r;
    }
    return r;
  }

  int rank() const {
    DenseMatrix m(*this);
    return m.rref_in_place();
  }

  std::optional<DenseMatrix> inverse() const {
    if (rows_ != cols_) throw StructuralError("inverse of non-square matrix");
    DenseMatrix aug(rows_, 2 * cols_, zero_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = zero_.one();
    }
    aug.rref_in_place();
    for (int i = 0; i < rows_; ++i)
      if (!aug.at(i, i).is_one()) return std::nullopt;
    DenseMatrix inv(rows_, cols_, zero_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

  // Basis of the right kernel {v : A v = 0}.
  std::vector<std::vector<K>> kernel_basis() const {
    DenseMatrix m(*this);
    std::vector<int> pivots;
    m.rref_in_place(&pivots);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<K>> basis;
    for (int free = 0; free < cols_; ++free) {
      if (is_pivot[static_cast<std::size_t>(free)]) continue;
      std::vector<K> v(static_cast<std::size_t>(cols_), zero_);
      v[static_cast<std::size_t>(free)] = zero_.one();
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        // pivot row r has leading 1 in column pivots[r]
        v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  int rows_, cols_;
  K zero_;
  std::vector<K> a_;
};

template <class K>
DenseMatrix<K> random_matrix(const Domain<K>& dom, SeedStream& rng, int rows, int cols) {
  DenseMatrix<K> m(rows, cols, dom.zero());
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = dom.sample(rng);
  return m;
}

template <class K>
DenseMatrix<K> random_invertible(const Domain<K>& dom, SeedStream& rng, int n) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    DenseMatrix<K> m = random_matrix(dom, rng, n, n);
    if (m.rank() == n) return m;
  }
  throw RetriesExhausted("random invertible matrix", 100);
}

}  // namespace cremona
