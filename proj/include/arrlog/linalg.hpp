#pragma once

// Dense linear algebra over the ground field: row echelon form, rank,
// nullspace and solving. Used for lattice computations, coordinate changes
// and the brute-force degreewise checks.

#include <optional>
#include <stdexcept>
#include <vector>

namespace arrlog {

template <class F>
struct DenseMatrix {
  int rows = 0, cols = 0;
  std::vector<typename F::Elt> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c, const F& field) : rows(r), cols(c), a(std::size_t(r) * c, field.zero()) {}

  typename F::Elt& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  const typename F::Elt& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
};

// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<int> rowReduce(const F& field, DenseMatrix<F>& M) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < M.cols && r < M.rows; ++c) {
    int p = -1;
    for (int i = r; i < M.rows; ++i) {
      if (!field.isZero(M.at(i, c))) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r)
      for (int j = c; j < M.cols; ++j) std::swap(M.at(p, j), M.at(r, j));
    auto inv = field.inv(M.at(r, c));
    for (int j = c; j < M.cols; ++j) M.at(r, j) = field.mul(M.at(r, j), inv);
    for (int i = 0; i < M.rows; ++i) {
      if (i == r || field.isZero(M.at(i, c))) continue;
      auto f = M.at(i, c);
      for (int j = c; j < M.cols; ++j)
        M.at(i, j) = field.sub(M.at(i, j), field.mul(f, M.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int matrixRank(const F& field, DenseMatrix<F> M) {
  return static_cast<int>(rowReduce(field, M).size());
}

// Basis of the right nullspace (vectors v with Mv = 0).
template <class F>
std::vector<std::vector<typename F::Elt>> nullspaceBasis(const F& field, DenseMatrix<F> M) {
  std::vector<int> pivots = rowReduce(field, M);
  std::vector<bool> isPivot(M.cols, false);
  for (int c : pivots) isPivot[c] = true;
  std::vector<std::vector<typename F::Elt>> basis;
  for (int freeCol = 0; freeCol < M.cols; ++freeCol) {
    if (isPivot[freeCol]) continue;
    std::vector<typename F::Elt> v(M.cols, field.zero());
    v[freeCol] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = field.neg(M.at(static_cast<int>(r), freeCol));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Unique solution of Ax = b when the columns of A are independent; nullopt
// when inconsistent. Throws if the system is underdetermined.
template <class F>
std::optional<std::vector<typename F::Elt>> solveExact(const F& field, const DenseMatrix<F>& A,
                                                       const std::vector<typename F::Elt>& b) {
  if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solveExact: size mismatch");
  DenseMatrix<F> M(A.rows, A.cols + 1, field);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
    M.at(i, A.cols) = b[i];
  }
  std::vector<int> pivots = rowReduce(field, M);
  for (int c : pivots)
    if (c == A.cols) return std::nullopt;  // pivot in the augmented column
  if (static_cast<int>(pivots.size()) < A.cols) {
    // consistent but underdetermined: only legal when some variable is free
    // yet unused; callers here always pass full-column-rank systems
    throw std::invalid_argument("solveExact: columns are dependent");
  }
  std::vector<typename F::Elt> x(A.cols, field.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = M.at(static_cast<int>(r), A.cols);
  return x;
}

template <class F>
typename F::Elt determinant(const F& field, DenseMatrix<F> M) {
  if (M.rows != M.cols) throw std::invalid_argument("determinant: matrix not square");
  auto det = field.one();
  for (int c = 0; c < M.cols; ++c) {
    int p = -1;
    for (int i = c; i < M.rows; ++i) {
      if (!field.isZero(M.at(i, c))) {
        p = i;
        break;
      }
    }
    if (p < 0) return field.zero();
    if (p != c) {
      for (int j = 0; j < M.cols; ++j) std::swap(M.at(p, j), M.at(c, j));
      det = field.neg(det);
    }
    det = field.mul(det, M.at(c, c));
    auto inv = field.inv(M.at(c, c));
    for (int i = c + 1; i < M.rows; ++i) {
      if (field.isZero(M.at(i, c))) continue;
      auto f = field.mul(M.at(i, c), inv);
      for (int j = c; j < M.cols; ++j)
        M.at(i, j) = field.sub(M.at(i, j), field.mul(f, M.at(c, j)));
    }
  }
  return det;
}

}  // namespace arrlog
