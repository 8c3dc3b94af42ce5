#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "ptrace/scalar.hpp"

namespace ptrace {

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  DenseMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  DenseMatrix transpose() const;
  DenseMatrix operator*(const DenseMatrix& o) const;
  DenseMatrix operator-(const DenseMatrix& o) const;
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::size_t rank() const;
  /// cols - rank: dimension of the quotient of K^cols by the row space.
  std::size_t row_space_complement_dim() const { return cols_ - rank(); }
  /// Reduced row echelon form; pivot columns are returned through `pivots`.
  DenseMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  /// Basis of {v : M v = 0}, as the columns of a cols x k matrix.
  DenseMatrix nullspace() const;
  /// Throws DivisionByZero when singular.
  DenseMatrix inverse() const;
  Scalar determinant() const;

  /// Columns of `this` and `o` side by side.
  DenseMatrix hconcat(const DenseMatrix& o) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

/// Sparse row as (column, value) pairs sorted by column, zero-free.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Incremental row echelon form over sparse rows.
///
/// Each stored row has a distinct pivot (its first column) with coefficient 1.
/// `insert` reduces a new row against the stored pivots and keeps the
/// remainder if it is nonzero, so `rank()` is the dimension of the span of
/// everything inserted so far.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  /// Returns true when the row was independent of the current span.
  bool insert(SparseRow row);
  /// Reduces `row` against the stored pivots without inserting it.
  SparseRow reduce(SparseRow row) const;
  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseRow> pivots_;
};

/// a - factor * b on sorted sparse rows.
SparseRow subtract_scaled(const SparseRow& a, const Scalar& factor, const SparseRow& b);

}  // namespace ptrace
