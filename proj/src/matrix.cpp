#include "ptrace/matrix.hpp"

#include <stdexcept>

#include "ptrace/errors.hpp"

namespace ptrace {

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ValidationError("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  DenseMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (!o(k, j).is_zero()) p(i, j) += a * o(k, j);
      }
    }
  }
  return p;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  DenseMatrix d(*this);
  for (std::size_t k = 0; k < a_.size(); ++k) d.a_[k] -= o.a_[k];
  return d;
}

DenseMatrix DenseMatrix::hconcat(const DenseMatrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hconcat: row mismatch");
  DenseMatrix c(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) c(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) c(i, cols_ + j) = o(i, j);
  }
  return c;
}

DenseMatrix DenseMatrix::rref(std::vector<std::size_t>* pivots) const {
  DenseMatrix m(*this);
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    // Among the candidate pivots pick the one with the smallest entry size.
    std::size_t best = rows_;
    std::size_t best_size = 0;
    for (std::size_t i = r; i < rows_; ++i) {
      if (m(i, c).is_zero()) continue;
      const std::size_t s = m(i, c).bit_size();
      if (best == rows_ || s < best_size) {
        best = i;
        best_size = s;
      }
    }
    if (best == rows_) continue;
    if (best != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(r, j), m(best, j));
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols_; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < cols_; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t DenseMatrix::rank() const {
  // Forward elimination only; smallest-size pivot per column.
  DenseMatrix m(*this);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t best = rows_;
    std::size_t best_size = 0;
    for (std::size_t i = r; i < rows_; ++i) {
      if (m(i, c).is_zero()) continue;
      const std::size_t s = m(i, c).bit_size();
      if (best == rows_ || s < best_size) {
        best = i;
        best_size = s;
      }
    }
    if (best == rows_) continue;
    if (best != r)
      for (std::size_t j = c; j < cols_; ++j) std::swap(m(r, j), m(best, j));
    const Scalar inv = m(r, c).inverse();
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < cols_; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    ++r;
  }
  return r;
}

DenseMatrix DenseMatrix::nullspace() const {
  std::vector<std::size_t> piv;
  DenseMatrix e = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  DenseMatrix basis(cols_, cols_ - piv.size());
  std::size_t k = 0;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    basis(f, k) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) basis(piv[r], k) = -e(r, f);
    ++k;
  }
  return basis;
}

DenseMatrix DenseMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  std::vector<std::size_t> piv;
  DenseMatrix e = hconcat(identity(rows_)).rref(&piv);
  if (piv.size() < rows_ || (rows_ > 0 && piv[rows_ - 1] != rows_ - 1)) throw DivisionByZero();
  DenseMatrix inv(rows_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rows_; ++j) inv(i, j) = e(i, rows_ + j);
  return inv;
}

Scalar DenseMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  DenseMatrix m(*this);
  Scalar det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && m(p, c).is_zero()) ++p;
    if (p == rows_) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(c, j), m(p, j));
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

SparseRow subtract_scaled(const SparseRow& a, const Scalar& factor, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(factor * b[j].second));
      ++j;
    } else {
      Scalar v = a[i].second - factor * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseRow RowEchelon::reduce(SparseRow row) const {
  // Pivot columns only grow along a reduction, so walk the row front to back.
  std::size_t pos = 0;
  while (pos < row.size()) {
    auto it = pivots_.find(row[pos].first);
    if (it == pivots_.end()) {
      ++pos;
      continue;
    }
    const Scalar f = row[pos].second;
    SparseRow head(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(pos));
    SparseRow tail(row.begin() + static_cast<std::ptrdiff_t>(pos), row.end());
    tail = subtract_scaled(tail, f, it->second);
    head.insert(head.end(), tail.begin(), tail.end());
    row = std::move(head);
  }
  return row;
}

bool RowEchelon::insert(SparseRow row) {
  // Only the leading entry needs to be a non-pivot for independence.
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    const Scalar f = row.front().second;
    row = subtract_scaled(row, f, it->second);
  }
  if (row.empty()) return false;
  const Scalar inv = row.front().second.inverse();
  for (auto& [c, v] : row) v *= inv;
  const std::size_t lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  return true;
}

}  // namespace ptrace
